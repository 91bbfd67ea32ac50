use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swapped(self) -> Self {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word in the free algebra on `x, y`; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

/// Run lengths of a word, alternating letters from the first one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn power(letter: Letter, k: usize) -> Self {
        Word(vec![letter; k])
    }

    /// Parses a plain letter string such as `xyxx`.
    pub fn from_letters(s: &str) -> Option<Self> {
        s.chars()
            .map(|ch| match ch {
                'x' => Some(Letter::X),
                'y' => Some(Letter::Y),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    /// The `index`th word of length `n` in lexicographic order (`x < y`).
    pub fn from_index(n: usize, index: usize) -> Self {
        Word(
            (0..n)
                .map(|k| if index >> (n - 1 - k) & 1 == 0 { Letter::X } else { Letter::Y })
                .collect(),
        )
    }

    /// Inverse of [`Word::from_index`].
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, l| (acc << 1) | usize::from(*l == Letter::Y))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of `x`s and of `y`s.
    pub fn counts(&self) -> (usize, usize) {
        let xs = self.0.iter().filter(|l| **l == Letter::X).count();
        (xs, self.0.len() - xs)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Image under `x <-> y`.
    pub fn swapped(&self) -> Word {
        Word(self.0.iter().map(|l| l.swapped()).collect())
    }

    pub fn signature(&self) -> Signature {
        let mut runs: Vec<usize> = Vec::new();
        let mut prev = None;
        for &l in &self.0 {
            if prev == Some(l) {
                *runs.last_mut().expect("a run is open") += 1;
            } else {
                runs.push(1);
                prev = Some(l);
            }
        }
        Signature(runs)
    }

    /// Uncompressed letters, empty for the trivial word.
    pub fn letter_string(&self) -> String {
        self.0.iter().map(|l| l.as_char()).collect()
    }

    /// Whether some inner run is no longer than the run to its right and no
    /// longer than the run to its left.
    pub fn is_reducible(&self) -> bool {
        let sig = self.signature();
        let by_valley = sig.has_valley();
        let by_shape = !sig.is_unimodal();
        assert_eq!(by_valley, by_shape, "reducibility characterizations disagree on {self}");
        by_valley
    }

    pub fn is_irreducible(&self) -> bool {
        !self.is_reducible()
    }
}

impl Signature {
    /// Some `i_{k-1} >= i_k < i_{k+1}`.
    pub fn has_valley(&self) -> bool {
        self.0.windows(3).any(|w| w[0] >= w[1] && w[1] < w[2])
    }

    /// Strictly increasing up to some peak, then non-increasing.
    pub fn is_unimodal(&self) -> bool {
        let runs = &self.0;
        let mut t = 0;
        while t + 1 < runs.len() && runs[t] < runs[t + 1] {
            t += 1;
        }
        runs[t..].windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Display for Word {
    /// Compressed form such as `xyx^2`; the trivial word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            write!(f, "{}", l.as_char())?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}

/// All words of length `n` in lexicographic order.
pub fn all_words(n: usize) -> impl Iterator<Item = Word> {
    (0..1usize << n).map(move |i| Word::from_index(n, i))
}

/// Irreducible words of length `n` in lexicographic order.
pub fn enumerate_irreducible(n: usize) -> Vec<Word> {
    all_words(n).filter(Word::is_irreducible).collect()
}
