//! Explicit finite unital rings given by Cayley tables.
//!
//! Elements are dense indices `0..n`. Both tables are stored row-major, so
//! `a + b` is `add[a * n + b]`.

use std::fmt::Write as _;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Index of a ring element.
pub type Elem = u32;

/// Rings up to this order are validated exhaustively; larger ones by sampling.
const EXHAUSTIVE_CHECK_ORDER: usize = 256;
const SAMPLED_TRIPLES: usize = 200_000;

#[derive(Clone, Debug)]
pub struct FiniteRing {
    name: String,
    order: usize,
    add: Vec<Elem>,
    mul: Vec<Elem>,
    zero: Elem,
    one: Elem,
    labels: Option<Vec<String>>,
    neg: Vec<Elem>,
    units: OnceLock<Vec<Elem>>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.add == other.add
            && self.mul == other.mul
            && self.zero == other.zero
            && self.one == other.one
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Assembles a ring from tables that are correct by construction.
    pub(crate) fn from_parts(
        name: String,
        order: usize,
        add: Vec<Elem>,
        mul: Vec<Elem>,
        zero: Elem,
        one: Elem,
        labels: Option<Vec<String>>,
    ) -> Self {
        debug_assert_eq!(add.len(), order * order);
        debug_assert_eq!(mul.len(), order * order);
        let mut neg = vec![0; order];
        for a in 0..order {
            for b in 0..order {
                if add[a * order + b] == zero {
                    neg[a] = b as Elem;
                    break;
                }
            }
        }
        FiniteRing {
            name,
            order,
            add,
            mul,
            zero,
            one,
            labels,
            neg,
            units: OnceLock::new(),
        }
    }

    /// Builds a ring from raw tables, locating `0` and `1` and checking every
    /// ring axiom.
    pub fn from_tables(name: impl Into<String>, add: Vec<Elem>, mul: Vec<Elem>) -> Result<Self> {
        let n = num_integer::Roots::sqrt(&add.len());
        if n * n != add.len() {
            return Err(Error::NotARing("addition table is not square".into()));
        }
        if n == 0 {
            return Err(Error::NotARing("empty table".into()));
        }
        if mul.len() != add.len() {
            return Err(Error::NotARing("table sizes differ".into()));
        }
        if add.iter().chain(mul.iter()).any(|&x| x as usize >= n) {
            return Err(Error::NotARing("table entry out of range".into()));
        }
        let zero = (0..n)
            .find(|&z| (0..n).all(|x| add[z * n + x] as usize == x && add[x * n + z] as usize == x))
            .ok_or_else(|| Error::NotARing("no additive identity".into()))?;
        let one = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or_else(|| Error::NotARing("no multiplicative identity".into()))?;
        let ring = Self::from_parts(name.into(), n, add, mul, zero as Elem, one as Elem, None);
        ring.validate()?;
        Ok(ring)
    }

    /// Checks the ring axioms: exhaustively up to order 256, on a fixed
    /// pseudo-random sample of triples above that.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n as Elem {
            if self.add(a, self.neg(a)) != self.zero {
                return Err(Error::NotARing(format!(
                    "element {a} has no additive inverse"
                )));
            }
            for b in 0..n as Elem {
                if self.add(a, b) != self.add(b, a) {
                    return Err(Error::NotARing(format!(
                        "addition not commutative at ({a}, {b})"
                    )));
                }
            }
            if self.mul(a, self.zero) != self.zero || self.mul(self.zero, a) != self.zero {
                return Err(Error::NotARing(format!("zero does not annihilate {a}")));
            }
        }
        let check = |a: Elem, b: Elem, c: Elem| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return Err(Error::NotARing(format!(
                    "addition not associative at ({a}, {b}, {c})"
                )));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::NotARing(format!(
                    "multiplication not associative at ({a}, {b}, {c})"
                )));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                || self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c))
            {
                return Err(Error::NotARing(format!(
                    "distributivity fails at ({a}, {b}, {c})"
                )));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_CHECK_ORDER {
            for a in 0..n as Elem {
                for b in 0..n as Elem {
                    for c in 0..n as Elem {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f00d);
            for _ in 0..SAMPLED_TRIPLES {
                let a = rng.gen_range(0..n) as Elem;
                let b = rng.gen_range(0..n) as Elem;
                let c = rng.gen_range(0..n) as Elem;
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.order as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `k · x` in the additive group.
    pub fn multiple(&self, k: u64, x: Elem) -> Elem {
        let mut acc = self.zero;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Order of `x` in `(R, +)`.
    pub fn additive_order(&self, x: Elem) -> u64 {
        let mut k = 1;
        let mut acc = x;
        while acc != self.zero {
            acc = self.add(acc, x);
            k += 1;
        }
        k
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn label(&self, x: Elem) -> String {
        match &self.labels {
            Some(labels) => labels[x as usize].clone(),
            None => x.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// The opposite ring: same elements and addition, multiplication reversed.
    pub fn opposite(&self) -> FiniteRing {
        let n = self.order;
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = self.mul[b * n + a];
            }
        }
        let name = match self
            .name
            .strip_prefix("op(")
            .and_then(|s| s.strip_suffix(')'))
        {
            Some(inner) => inner.to_string(),
            None => format!("op({})", self.name),
        };
        FiniteRing::from_parts(
            name,
            n,
            self.add.clone(),
            mul,
            self.zero,
            self.one,
            self.labels.clone(),
        )
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| self.mul[a * n + b] == self.mul[b * n + a]))
    }

    /// Group of units `U(R)`, sorted by index.
    ///
    /// For a finite ring a one-sided inverse is two-sided; the scan still
    /// checks both products.
    pub fn units(&self) -> &[Elem] {
        self.units.get_or_init(|| {
            self.elements()
                .filter(|&u| {
                    self.elements()
                        .any(|v| self.mul(u, v) == self.one && self.mul(v, u) == self.one)
                })
                .collect()
        })
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        self.units().binary_search(&x).is_ok()
    }

    /// Two-sided inverse of a unit.
    pub fn inverse(&self, u: Elem) -> Option<Elem> {
        self.elements()
            .find(|&v| self.mul(u, v) == self.one && self.mul(v, u) == self.one)
    }

    pub fn is_idempotent(&self, e: Elem) -> bool {
        self.mul(e, e) == e
    }

    /// Canonical text form: a header line `ring <name> order <n>`, then the
    /// addition rows, then the multiplication rows.
    pub fn to_canonical_string(&self) -> String {
        let n = self.order;
        let name = if self.name.is_empty() || self.name.contains(char::is_whitespace) {
            self.name.split_whitespace().collect::<Vec<_>>().join("_")
        } else {
            self.name.clone()
        };
        let name = if name.is_empty() {
            "R".to_string()
        } else {
            name
        };
        let mut out = String::with_capacity(2 * n * n * 3);
        let _ = writeln!(out, "ring {name} order {n}");
        for table in [&self.add, &self.mul] {
            for row in table.chunks(n) {
                let mut first = true;
                for x in row {
                    if !first {
                        out.push(' ');
                    }
                    first = false;
                    let _ = write!(out, "{x}");
                }
                out.push('\n');
            }
        }
        out
    }

    /// Parses the canonical text form produced by [`Self::to_canonical_string`].
    pub fn from_canonical_str(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::NotARing("empty input".into()))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (name, n) = match words.as_slice() {
            ["ring", name, "order", n] => (
                *name,
                n.parse::<usize>()
                    .map_err(|_| Error::NotARing(format!("bad order {n:?}")))?,
            ),
            _ => return Err(Error::NotARing(format!("bad header {header:?}"))),
        };
        let mut entries = Vec::with_capacity(2 * n * n);
        for (row, line) in lines.enumerate() {
            let before = entries.len();
            for tok in line.split_whitespace() {
                entries.push(
                    tok.parse::<Elem>()
                        .map_err(|_| Error::NotARing(format!("bad entry {tok:?} in row {row}")))?,
                );
            }
            if entries.len() - before != n {
                return Err(Error::NotARing(format!("row {row} has wrong length")));
            }
        }
        if entries.len() != 2 * n * n {
            return Err(Error::NotARing("wrong number of table rows".into()));
        }
        let mul = entries.split_off(n * n);
        Self::from_tables(name, entries, mul)
    }
}
