//! Monomials, monomial ideals and variable orders.
//!
//! A [`MonomialIdeal`] always holds its minimal generating set in canonical
//! order (ascending total degree, ties broken by descending exponent vector),
//! so two ideals are equal exactly when their generator sequences are equal.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector over an ordered set of variables; index `i` is the
/// exponent of `x_{i+1}`. Serialized as the bare exponent array.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
    // support bits of the first 64 variables, used to reject divisibility early
    mask: u64,
}

fn support_mask(exps: &[u32]) -> u64 {
    exps.iter()
        .take(64)
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0u64, |m, (i, _)| m | (1 << i))
}

impl From<Vec<u32>> for Monomial {
    fn from(exps: Vec<u32>) -> Self {
        Monomial::new(exps)
    }
}

impl From<Monomial> for Vec<u32> {
    fn from(m: Monomial) -> Self {
        m.exps
    }
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        let mask = support_mask(&exps);
        Monomial { exps, degree, mask }
    }

    pub fn unit(ambient: usize) -> Self {
        Monomial::new(vec![0; ambient])
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn variable(ambient: usize, i: usize) -> Self {
        let mut exps = vec![0; ambient];
        exps[i] = 1;
        Monomial::new(exps)
    }

    /// Squarefree monomial with the given 0-based support.
    pub fn squarefree(ambient: usize, support: impl IntoIterator<Item = usize>) -> Self {
        let mut exps = vec![0; ambient];
        for i in support {
            exps[i] = 1;
        }
        Monomial::new(exps)
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// 0-based indices of the variables dividing this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    fn check_dim(&self, other: &Monomial) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::DimensionMismatch {
                left: self.exps.len(),
                right: other.exps.len(),
            });
        }
        Ok(())
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dim(other)?;
        Ok(self.divides_unchecked(other))
    }

    /// Divisibility without the dimension check.
    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.mask & !other.mask == 0
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// Divisibility of `self` into an exponent vector.
    #[inline]
    pub(crate) fn divides_exps(&self, exps: &[u32]) -> bool {
        self.exps.iter().zip(exps).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dim(other)?;
        Ok(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        ))
    }

    /// `self / other` if `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        if self.exps.len() != other.exps.len() || !other.divides_unchecked(self) {
            return None;
        }
        Some(Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        ))
    }

    /// `self / gcd(self, other)`: the generator of the colon `(self) : other`.
    pub(crate) fn colon_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    /// `x_i * self`.
    pub fn times_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(Monomial::new(exps))
    }

    /// `self / x_i`, if `x_i` divides `self`.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Some(Monomial::new(exps))
    }

    /// Rename variables: variable `i` becomes variable `perm[i]`.
    pub fn rename(&self, perm: &[usize]) -> Monomial {
        let mut exps = vec![0; self.exps.len()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[perm[i]] = e;
        }
        Monomial::new(exps)
    }

    /// Parse `x1^2*x3` (or `1`) against a known ambient dimension.
    pub fn parse(text: &str, ambient: usize) -> Result<Monomial> {
        let factors = parse_factors(text)?;
        let mut exps = vec![0u32; ambient];
        for (var, e) in factors {
            if var == 0 || var > ambient {
                return Err(Error::Parse(format!(
                    "variable x{var} outside ambient dimension {ambient}"
                )));
            }
            exps[var - 1] = exps[var - 1]
                .checked_add(e)
                .ok_or(Error::ExponentOverflow)?;
        }
        Ok(Monomial::new(exps))
    }
}

/// Splits `x1^2*x3` into `[(1, 2), (3, 1)]` (1-based variable labels).
fn parse_factors(text: &str) -> Result<Vec<(usize, u32)>> {
    let text = text.trim();
    if text == "1" {
        return Ok(Vec::new());
    }
    text.split('*')
        .map(|factor| {
            let factor = factor.trim();
            let rest = factor
                .strip_prefix('x')
                .ok_or_else(|| Error::Parse(format!("bad factor '{factor}'")))?;
            let (var, exp) = match rest.split_once('^') {
                Some((v, e)) => (v, e),
                None => (rest, "1"),
            };
            let var: usize = var
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable in '{factor}'")))?;
            let exp: u32 = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
            Ok((var, exp))
        })
        .collect()
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Calls `f` on every exponent vector of length `n` and total degree `d`,
/// optionally bounded componentwise by `bounds`.
pub(crate) fn for_each_exponent_of_degree(
    n: usize,
    d: u32,
    bounds: Option<&[u32]>,
    f: &mut dyn FnMut(&[u32]),
) {
    fn rec(
        pos: usize,
        left: u32,
        cur: &mut Vec<u32>,
        bounds: Option<&[u32]>,
        f: &mut dyn FnMut(&[u32]),
    ) {
        let n = cur.len();
        if pos + 1 == n {
            if bounds.is_none_or(|b| left <= b[pos]) {
                cur[pos] = left;
                f(cur);
                cur[pos] = 0;
            }
            return;
        }
        let cap = bounds.map_or(left, |b| left.min(b[pos]));
        for e in 0..=cap {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, bounds, f);
        }
        cur[pos] = 0;
    }
    if n == 0 {
        if d == 0 {
            f(&[]);
        }
        return;
    }
    let mut cur = vec![0u32; n];
    rec(0, d, &mut cur, bounds, f);
}

/// Monomial ideal stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// all-zeros monomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealJson", into = "IdealJson")]
pub struct MonomialIdeal {
    ambient: usize,
    gens: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    ambient: usize,
    generators: Vec<Vec<u32>>,
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(value: IdealJson) -> Result<Self> {
        MonomialIdeal::from_exponents(value.ambient, value.generators)
    }
}

impl From<MonomialIdeal> for IdealJson {
    fn from(ideal: MonomialIdeal) -> Self {
        IdealJson {
            ambient: ideal.ambient,
            generators: ideal.gens.into_iter().map(|m| m.exps).collect(),
        }
    }
}

/// Sort, dedupe and drop every non-minimal element.
fn minimal_elements(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // kept[..lower] are the kept generators of strictly smaller degree
    let mut lower = 0;
    let mut current_degree = None;
    for m in gens {
        if current_degree != Some(m.degree) {
            current_degree = Some(m.degree);
            lower = kept.len();
        }
        if !kept[..lower].iter().any(|k| k.divides_unchecked(&m)) {
            kept.push(m);
        }
    }
    kept
}

/// Canonical minimal ideal generated by `gens`.
pub fn minimize(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(ambient, gens)
}

/// Result of [`MonomialIdeal::polarize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polarization {
    pub ideal: MonomialIdeal,
    /// `blocks[i]` lists the new (0-based) variables replacing `x_{i+1}`;
    /// `x_{i+1}^a` becomes the product of the first `a` of them.
    pub blocks: Vec<Vec<usize>>,
}

impl MonomialIdeal {
    pub fn new(ambient: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|m| m.ambient() != ambient) {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: bad.ambient(),
            });
        }
        Ok(MonomialIdeal {
            ambient,
            gens: minimal_elements(gens),
        })
    }

    pub fn from_exponents(ambient: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        MonomialIdeal::new(ambient, gens.into_iter().map(Monomial::new))
    }

    /// Builds from generators already known to be minimal and same-dimension.
    pub(crate) fn from_minimal(ambient: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        debug_assert!(gens.iter().all(|g| g.ambient() == ambient));
        MonomialIdeal { ambient, gens }
    }

    pub fn zero(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    pub fn unit(ambient: usize) -> Self {
        MonomialIdeal {
            ambient,
            gens: vec![Monomial::unit(ambient)],
        }
    }

    pub fn principal(m: Monomial) -> Self {
        MonomialIdeal {
            ambient: m.ambient(),
            gens: vec![m],
        }
    }

    /// The prime ideal generated by the given 0-based variables.
    pub fn prime(ambient: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        MonomialIdeal::from_minimal(
            ambient,
            vars.into_iter()
                .map(|i| Monomial::variable(ambient, i))
                .collect(),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn is_equigenerated(&self) -> bool {
        self.gens.windows(2).all(|w| w[0].degree == w[1].degree)
    }

    fn check_dim(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: other,
            });
        }
        Ok(())
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_dim(m.ambient())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_unchecked(m))
    }

    pub fn is_generator(&self, m: &Monomial) -> bool {
        self.gens.binary_search(m).is_ok()
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient)?;
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.try_mul(b)?);
            }
        }
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(products),
        })
    }

    /// `I^s` by repeated multiplication; `I^0` is the unit ideal.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ambient);
        for _ in 0..s {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm_unchecked(b));
            }
        }
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(lcms),
        })
    }

    /// Intersection of many ideals, folding the ones with the fewest
    /// generators first. The empty intersection is the unit ideal.
    pub fn intersect_all(
        ambient: usize,
        ideals: impl IntoIterator<Item = MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut ideals: Vec<MonomialIdeal> = ideals.into_iter().collect();
        ideals.sort_by_key(|i| i.len());
        ideals
            .iter()
            .try_fold(MonomialIdeal::unit(ambient), |acc, i| acc.intersect(i))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_dim(other.ambient)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            ambient: self.ambient,
            gens: minimal_elements(gens),
        })
    }

    pub fn sum_all(
        ambient: usize,
        ideals: impl IntoIterator<Item = MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut gens = Vec::new();
        for i in ideals {
            if i.ambient != ambient {
                return Err(Error::DimensionMismatch {
                    left: ambient,
                    right: i.ambient,
                });
            }
            gens.extend(i.gens);
        }
        Ok(MonomialIdeal {
            ambient,
            gens: minimal_elements(gens),
        })
    }

    /// `m * I`.
    pub fn scale(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_dim(m.ambient())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.try_mul(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal::from_minimal(self.ambient, gens))
    }

    /// Alexander dual of a squarefree ideal: the intersection of the primes
    /// `(x_i : i in supp u)` over the generators `u`.
    pub fn alexander_dual(&self) -> Result<MonomialIdeal> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        MonomialIdeal::intersect_all(
            self.ambient,
            self.gens
                .iter()
                .map(|u| MonomialIdeal::prime(self.ambient, u.support())),
        )
    }

    /// Squarefree polarization. Every variable keeps at least one slot, so a
    /// squarefree ideal polarizes to itself.
    pub fn polarize(&self) -> Polarization {
        let mut blocks = Vec::with_capacity(self.ambient);
        let mut next = 0;
        for i in 0..self.ambient {
            let width = self
                .gens
                .iter()
                .map(|g| g.exps[i])
                .max()
                .unwrap_or(0)
                .max(1) as usize;
            blocks.push((next..next + width).collect::<Vec<_>>());
            next += width;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::squarefree(
                    next,
                    g.exps
                        .iter()
                        .enumerate()
                        .flat_map(|(i, &e)| blocks[i][..e as usize].iter().copied()),
                )
            })
            .collect();
        Polarization {
            ideal: MonomialIdeal::from_minimal(next, gens),
            blocks,
        }
    }

    /// `I ∩ m^t` where `m` is the maximal homogeneous ideal.
    pub fn truncate(&self, t: u32) -> MonomialIdeal {
        // Degree-t members of I together with the generators of degree > t are
        // already a minimal generating set.
        let mut gens: HashSet<Monomial> = HashSet::new();
        for g in &self.gens {
            if g.degree >= t {
                gens.insert(g.clone());
                continue;
            }
            for_each_exponent_of_degree(self.ambient, t - g.degree, None, &mut |e| {
                let exps = g.exps.iter().zip(e).map(|(a, b)| a + b).collect();
                gens.insert(Monomial::new(exps));
            });
        }
        MonomialIdeal::from_minimal(self.ambient, gens.into_iter().collect())
    }

    /// The ideal generated by the degree-`d` members of `I`.
    pub fn component(&self, d: u32) -> MonomialIdeal {
        let truncated = self.truncate(d);
        MonomialIdeal::from_minimal(
            self.ambient,
            truncated
                .gens
                .into_iter()
                .filter(|g| g.degree == d)
                .collect(),
        )
    }

    /// Smallest generator degree.
    pub fn deg_min(&self) -> Result<u32> {
        self.gens.first().map(|g| g.degree).ok_or(Error::ZeroIdeal)
    }

    /// Largest generator degree.
    pub fn deg_max(&self) -> Result<u32> {
        self.gens
            .iter()
            .map(|g| g.degree)
            .max()
            .ok_or(Error::ZeroIdeal)
    }

    /// Distinct generator degrees in ascending order.
    pub fn generator_degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.gens.iter().map(|g| g.degree).collect();
        d.dedup();
        d
    }

    /// lcm of all generators (the unit monomial for the zero ideal).
    pub fn lcm_of_generators(&self) -> Monomial {
        self.gens
            .iter()
            .fold(Monomial::unit(self.ambient), |acc, g| acc.lcm_unchecked(g))
    }

    /// Rename variables: variable `i` becomes variable `perm[i]`.
    pub fn rename(&self, perm: &[usize]) -> Result<MonomialIdeal> {
        let mut seen = vec![false; self.ambient];
        if perm.len() != self.ambient
            || perm
                .iter()
                .any(|&p| p >= self.ambient || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidArgument(
                "renaming is not a permutation of the variables".into(),
            ));
        }
        Ok(MonomialIdeal::from_minimal(
            self.ambient,
            self.gens.iter().map(|g| g.rename(perm)).collect(),
        ))
    }

    /// One generator per line in `x1^a1*x2^a2` form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    /// Parses the line format. Without an explicit ambient dimension the
    /// largest variable index mentioned is used.
    pub fn from_text(text: &str, ambient: Option<usize>) -> Result<MonomialIdeal> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let parsed = lines
            .iter()
            .map(|l| parse_factors(l))
            .collect::<Result<Vec<_>>>()?;
        let seen = parsed.iter().flatten().map(|(v, _)| *v).max().unwrap_or(1);
        let ambient = ambient.unwrap_or(seen);
        let gens = lines
            .iter()
            .map(|l| Monomial::parse(l, ambient))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::new(ambient, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<MonomialIdeal> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A total order on the variables: `ranking()[r]` is the variable of rank
/// `r`, rank 0 being the greatest.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VariableOrder {
    ranking: Vec<usize>,
    rank_of: Vec<usize>,
}

impl VariableOrder {
    /// `x1 > x2 > ... > xn`.
    pub fn identity(n: usize) -> Self {
        VariableOrder {
            ranking: (0..n).collect(),
            rank_of: (0..n).collect(),
        }
    }

    /// From 0-based variable indices, greatest first.
    pub fn new(ranking: Vec<usize>) -> Result<Self> {
        let n = ranking.len();
        let mut rank_of = vec![usize::MAX; n];
        for (r, &v) in ranking.iter().enumerate() {
            if v >= n || rank_of[v] != usize::MAX {
                return Err(Error::InvalidOrder(format!(
                    "{ranking:?} is not a permutation of 0..{n}"
                )));
            }
            rank_of[v] = r;
        }
        Ok(VariableOrder { ranking, rank_of })
    }

    /// From 1-based variable labels, greatest first.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if labels.contains(&0) {
            return Err(Error::InvalidOrder("variable labels start at 1".into()));
        }
        VariableOrder::new(labels.iter().map(|l| l - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.ranking.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranking.is_empty()
    }

    pub fn ranking(&self) -> &[usize] {
        &self.ranking
    }

    pub fn variable_at(&self, rank: usize) -> usize {
        self.ranking[rank]
    }

    pub fn rank_of(&self, var: usize) -> usize {
        self.rank_of[var]
    }

    /// 1-based labels, greatest first.
    pub fn labels(&self) -> Vec<usize> {
        self.ranking.iter().map(|v| v + 1).collect()
    }

    /// The order induced after renaming variable `i` to `perm[i]`.
    pub fn rename(&self, perm: &[usize]) -> VariableOrder {
        VariableOrder::new(self.ranking.iter().map(|&v| perm[v]).collect())
            .expect("renaming a permutation yields a permutation")
    }
}

impl TryFrom<Vec<usize>> for VariableOrder {
    type Error = Error;

    fn try_from(labels: Vec<usize>) -> Result<Self> {
        VariableOrder::from_labels(&labels)
    }
}

impl From<VariableOrder> for Vec<usize> {
    fn from(order: VariableOrder) -> Self {
        order.labels()
    }
}

impl FromStr for VariableOrder {
    type Err = Error;

    /// Comma-separated 1-based labels, e.g. `3,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let labels = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad variable label '{t}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        VariableOrder::from_labels(&labels)
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = self.labels().iter().map(|l| format!("x{l}")).collect();
        write!(f, "{}", labels.join(" > "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn triangle_cover() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    #[test]
    fn divides_componentwise() {
        assert!(m(&[0, 0, 0]).divides(&m(&[3, 0, 1])).unwrap());
        assert!(m(&[1, 1, 0]).divides(&m(&[1, 1, 1])).unwrap());
        assert!(!m(&[2, 0, 0]).divides(&m(&[1, 1, 1])).unwrap());
        assert_eq!(
            m(&[1, 0]).divides(&m(&[1, 0, 0])),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn minimize_drops_multiples() {
        let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1]]);
        assert_eq!(i.generators(), &[m(&[1, 1, 0])]);
        let i = ideal(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(i.generators(), &[m(&[1, 0]), m(&[0, 1])]);
    }

    #[test]
    fn triangle_square_products_are_all_minimal() {
        let j = triangle_cover();
        let gens = j.generators();
        let mut products = Vec::new();
        for a in 0..gens.len() {
            for b in a..gens.len() {
                products.push(gens[a].try_mul(&gens[b]).unwrap());
            }
        }
        assert_eq!(products.len(), 6);
        // brute-force pairwise check: no product divides another
        for (x, p) in products.iter().enumerate() {
            for (y, q) in products.iter().enumerate() {
                if x != y {
                    assert!(!p.divides(q).unwrap());
                }
            }
        }
        let sq = minimize(3, products).unwrap();
        assert_eq!(sq.len(), 6);
        assert_eq!(sq, j.power(2).unwrap());
        assert!(sq.generators().iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn contains_examples() {
        let j = triangle_cover();
        assert!(j.contains(&m(&[1, 1, 1])).unwrap());
        assert!(!j.contains(&m(&[3, 0, 0])).unwrap());
    }

    #[test]
    fn zero_and_unit_are_absorbing_and_neutral() {
        let j = triangle_cover();
        assert_eq!(j.multiply(&MonomialIdeal::unit(3)).unwrap(), j);
        assert!(j.multiply(&MonomialIdeal::zero(3)).unwrap().is_zero());
        assert_eq!(j.intersect(&MonomialIdeal::unit(3)).unwrap(), j);
        assert!(j.intersect(&MonomialIdeal::zero(3)).unwrap().is_zero());
        assert_eq!(j.power(0).unwrap(), MonomialIdeal::unit(3));
    }

    #[test]
    fn power_examples() {
        let j = triangle_cover();
        assert_eq!(j.power(1).unwrap(), j);
        let expected = ideal(
            3,
            &[
                &[2, 2, 0],
                &[2, 1, 1],
                &[1, 2, 1],
                &[2, 0, 2],
                &[1, 1, 2],
                &[0, 2, 2],
            ],
        );
        assert_eq!(j.power(2).unwrap(), expected);
        assert_eq!(ideal(2, &[&[1, 0]]).power(3).unwrap(), ideal(2, &[&[3, 0]]));
    }

    #[test]
    fn intersection_examples() {
        let a = ideal(2, &[&[1, 0]]);
        let b = ideal(2, &[&[0, 1]]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));

        let edges = [(0, 1), (1, 2), (0, 2)];
        let primes = edges.iter().map(|&(i, j)| MonomialIdeal::prime(3, [i, j]));
        assert_eq!(
            MonomialIdeal::intersect_all(3, primes.clone()).unwrap(),
            triangle_cover()
        );
        let squares = primes.map(|p| p.power(2).unwrap());
        let sym = MonomialIdeal::intersect_all(3, squares).unwrap();
        assert_eq!(
            sym,
            ideal(3, &[&[1, 1, 1], &[2, 2, 0], &[2, 0, 2], &[0, 2, 2]])
        );
        let herzog = triangle_cover()
            .power(2)
            .unwrap()
            .sum(&ideal(3, &[&[1, 1, 1]]))
            .unwrap();
        assert_eq!(sym, herzog);
    }

    #[test]
    fn alexander_dual_examples() {
        let j = triangle_cover();
        assert_eq!(j.alexander_dual().unwrap(), j);
        let x1 = ideal(2, &[&[1, 0]]);
        assert_eq!(x1.alexander_dual().unwrap(), x1);
        assert_eq!(
            ideal(2, &[&[2, 0]]).alexander_dual(),
            Err(Error::NotSquarefree)
        );
        assert_eq!(
            MonomialIdeal::zero(3).alexander_dual().unwrap(),
            MonomialIdeal::unit(3)
        );
        assert!(MonomialIdeal::unit(3).alexander_dual().unwrap().is_zero());
    }

    #[test]
    fn polarize_examples() {
        let p = ideal(1, &[&[2]]).polarize();
        assert_eq!(p.ideal, ideal(2, &[&[1, 1]]));
        assert_eq!(p.blocks, vec![vec![0, 1]]);
        let j = triangle_cover();
        assert_eq!(j.polarize().ideal, j);
    }

    #[test]
    fn truncate_examples() {
        let j = triangle_cover();
        assert_eq!(j.truncate(0), j);
        assert_eq!(j.truncate(2), j);
        let x1 = ideal(2, &[&[1, 0]]);
        assert_eq!(x1.truncate(2), ideal(2, &[&[2, 0], &[1, 1]]));
        assert!(MonomialIdeal::zero(2).truncate(3).is_zero());
    }

    #[test]
    fn component_collects_degree_slice() {
        let i = ideal(2, &[&[1, 0], &[0, 3]]);
        assert_eq!(i.component(2), ideal(2, &[&[2, 0], &[1, 1]]));
        assert_eq!(
            i.component(3),
            ideal(2, &[&[3, 0], &[2, 1], &[1, 2], &[0, 3]])
        );
    }

    #[test]
    fn degree_bounds() {
        let i = ideal(2, &[&[1, 0], &[0, 3]]);
        assert_eq!(i.deg_min().unwrap(), 1);
        assert_eq!(i.deg_max().unwrap(), 3);
        assert_eq!(MonomialIdeal::zero(2).deg_max(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn canonical_order_is_graded_then_lex() {
        let i = ideal(3, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0], &[0, 0, 3]]);
        let shown: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x1*x2", "x1*x3", "x2*x3", "x3^3"]);
    }

    #[test]
    fn text_and_json_formats() {
        let i = ideal(3, &[&[2, 0, 1], &[0, 1, 0]]);
        assert_eq!(i.to_text(), "x2\nx1^2*x3\n");
        assert_eq!(MonomialIdeal::from_text(&i.to_text(), Some(3)).unwrap(), i);
        assert_eq!(
            i.to_json(),
            r#"{"ambient":3,"generators":[[0,1,0],[2,0,1]]}"#
        );
        assert_eq!(MonomialIdeal::from_json(&i.to_json()).unwrap(), i);
        assert_eq!(MonomialIdeal::unit(2).to_text(), "1\n");
        assert!(MonomialIdeal::from_text("x4", Some(3)).is_err());
        assert!(MonomialIdeal::from_json(r#"{"ambient":2,"generators":[[1]]}"#).is_err());
    }

    #[test]
    fn variable_order_parsing() {
        let o: VariableOrder = "3,1,2".parse().unwrap();
        assert_eq!(o.ranking(), &[2, 0, 1]);
        assert_eq!(o.rank_of(0), 1);
        assert_eq!(o.to_string(), "x3 > x1 > x2");
        assert!("1,1,2".parse::<VariableOrder>().is_err());
        assert!("0,1".parse::<VariableOrder>().is_err());
    }
}
