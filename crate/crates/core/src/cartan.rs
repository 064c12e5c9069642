//! Finite root systems built from a Cartan matrix.
//!
//! Roots are stored in simple-root coordinates and coroots in simple-coroot
//! coordinates. The Cartan matrix is oriented so that
//! `cartan[i][j] = ⟨α_i, α_j∨⟩`, hence the pairing of a simple coroot with a
//! simple root is `⟨α_i∨, α_j⟩ = cartan[j][i]`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

/// Largest rank a [`LatticeVector`] can hold.
pub const MAX_RANK: usize = 8;

/// Upper bound on the number of positive roots generated before a Cartan
/// matrix is declared to be of non-finite type.
const MAX_POSITIVE_ROOTS: usize = 4096;

/// Marker for the lattice a [`LatticeVector`] lives in.
pub trait Space: Copy + Eq + Ord + Hash + fmt::Debug + Default + Send + Sync + 'static {
    const NAME: &'static str;
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSpace;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CorootSpace;

impl Space for RootSpace {
    const NAME: &'static str = "root";
}

impl Space for CorootSpace {
    const NAME: &'static str = "coroot";
}

/// An integer vector in the simple-root or simple-coroot basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector<S: Space> {
    rank: u8,
    coords: [i32; MAX_RANK],
    space: PhantomData<S>,
}

pub type RootVector = LatticeVector<RootSpace>;
pub type CorootVector = LatticeVector<CorootSpace>;

impl<S: Space> LatticeVector<S> {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK, "rank {rank} exceeds MAX_RANK");
        Self { rank: rank as u8, coords: [0; MAX_RANK], space: PhantomData }
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.coords[i] = 1;
        v
    }

    pub fn new(coords: &[i32]) -> Result<Self> {
        if coords.len() > MAX_RANK {
            return Err(invalid!("vector of length {} exceeds maximum rank {MAX_RANK}", coords.len()));
        }
        let mut v = Self::zero(coords.len());
        v.coords[..coords.len()].copy_from_slice(coords);
        Ok(v)
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.rank as usize]
    }

    pub fn get(&self, i: usize) -> i32 {
        self.coords()[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0) && !self.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        (-*self).is_positive()
    }

    /// Coordinatewise nonnegative (the zero vector included).
    pub fn is_nonnegative(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i32 {
        self.coords().iter().sum()
    }

    /// Reinterprets the coordinates in another lattice. Used where roots of a
    /// system are identified with coroots of its dual.
    pub fn cast<T: Space>(self) -> LatticeVector<T> {
        LatticeVector { rank: self.rank, coords: self.coords, space: PhantomData }
    }
}

impl<S: Space> fmt::Debug for LatticeVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if S::NAME == "root" { "α" } else { "α∨" }, self)
    }
}

impl<S: Space> fmt::Display for LatticeVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl<S: Space> Add for LatticeVector<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<S: Space> AddAssign for LatticeVector<S> {
    fn add_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank as usize {
            self.coords[i] += rhs.coords[i];
        }
    }
}

impl<S: Space> Sub for LatticeVector<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<S: Space> SubAssign for LatticeVector<S> {
    fn sub_assign(&mut self, rhs: Self) {
        debug_assert_eq!(self.rank, rhs.rank);
        for i in 0..self.rank as usize {
            self.coords[i] -= rhs.coords[i];
        }
    }
}

impl<S: Space> Neg for LatticeVector<S> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in &mut self.coords {
            *c = -*c;
        }
        self
    }
}

impl<S: Space> Mul<LatticeVector<S>> for i32 {
    type Output = LatticeVector<S>;
    fn mul(self, mut rhs: LatticeVector<S>) -> LatticeVector<S> {
        for c in &mut rhs.coords {
            *c *= self;
        }
        rhs
    }
}

impl<S: Space> Serialize for LatticeVector<S> {
    fn serialize<Z: serde::Serializer>(&self, s: Z) -> std::result::Result<Z::Ok, Z::Error> {
        self.coords().serialize(s)
    }
}

impl<'de, S: Space> Deserialize<'de> for LatticeVector<S> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        Self::new(&v).map_err(serde::de::Error::custom)
    }
}

/// On-disk form of a Cartan matrix: `{"cartan": [[...]], "label": "..."}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanFile {
    pub cartan: Vec<Vec<i32>>,
    pub label: String,
}

/// A finite irreducible root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<RootVector>,
    positive_coroots: Vec<CorootVector>,
    two_rho: RootVector,
    two_rho_check: CorootVector,
    highest_root: usize,
    highest_short_root: usize,
    /// Twice the squared length of each positive root, in units where the
    /// shortest simple root has the smallest integral value.
    norms: Vec<i64>,
    root_index: HashMap<RootVector, usize>,
    /// `pairing_rows[a][i] = ⟨α_i∨, positive_roots[a]⟩`.
    pairing_rows: Vec<[i32; MAX_RANK]>,
}

impl RootSystem {
    /// Builds the root system of a finite-type Cartan matrix.
    pub fn build(cartan: Vec<Vec<i32>>, label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        let rank = cartan.len();
        validate_cartan(&cartan)?;
        let norms_simple = symmetrizer(&cartan)?;

        // ⟨α_i∨, α_j⟩ = cartan[j][i]
        let pair_simple = |coroot: &CorootVector, root: &RootVector| -> i32 {
            let mut s = 0;
            for i in 0..rank {
                let ci = coroot.get(i);
                if ci == 0 {
                    continue;
                }
                for j in 0..rank {
                    s += ci * cartan[j][i] * root.get(j);
                }
            }
            s
        };

        // Close the simple roots under simple reflections, tracking coroots
        // alongside: (s_j α)∨ = s_j(α∨).
        let mut roots: Vec<(RootVector, CorootVector)> = Vec::new();
        let mut seen: HashMap<RootVector, usize> = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let a = RootVector::unit(rank, i);
            seen.insert(a, roots.len());
            roots.push((a, CorootVector::unit(rank, i)));
            queue.push_back(roots.len() - 1);
        }
        while let Some(idx) = queue.pop_front() {
            let (a, ac) = roots[idx];
            for j in 0..rank {
                let aj = RootVector::unit(rank, j);
                let ajc = CorootVector::unit(rank, j);
                let b = a - pair_simple(&ajc, &a) * aj;
                let bc = ac - pair_simple(&ac, &aj) * ajc;
                if b.is_positive() && !seen.contains_key(&b) {
                    if roots.len() >= MAX_POSITIVE_ROOTS {
                        return Err(Error::UnsupportedType(format!(
                            "{label}: root generation exceeded {MAX_POSITIVE_ROOTS} positive roots; not of finite type"
                        )));
                    }
                    seen.insert(b, roots.len());
                    roots.push((b, bc));
                    queue.push_back(roots.len() - 1);
                }
            }
        }
        roots.sort_by_key(|(a, _)| (a.height(), std::cmp::Reverse(*a)));

        let positive_roots: Vec<RootVector> = roots.iter().map(|r| r.0).collect();
        let positive_coroots: Vec<CorootVector> = roots.iter().map(|r| r.1).collect();
        let root_index = positive_roots.iter().enumerate().map(|(i, a)| (*a, i)).collect();
        let two_rho = positive_roots.iter().fold(RootVector::zero(rank), |s, a| s + *a);
        let two_rho_check = positive_coroots.iter().fold(CorootVector::zero(rank), |s, a| s + *a);

        let norms: Vec<i64> = positive_roots
            .iter()
            .map(|a| {
                let mut s = 0i64;
                for i in 0..rank {
                    for j in 0..rank {
                        s += (a.get(i) * a.get(j) * cartan[i][j]) as i64 * norms_simple[j];
                    }
                }
                s
            })
            .collect();
        let min_norm = *norms.iter().min().expect("rank >= 1");
        let highest_root = positive_roots.len() - 1;
        let highest_short_root = (0..positive_roots.len())
            .rev()
            .find(|&i| norms[i] == min_norm)
            .expect("some root is short");

        let pairing_rows = positive_roots
            .iter()
            .map(|a| {
                let mut row = [0; MAX_RANK];
                for (i, r) in row.iter_mut().enumerate().take(rank) {
                    *r = pair_simple(&CorootVector::unit(rank, i), a);
                }
                row
            })
            .collect();

        let rs = RootSystem {
            label,
            rank,
            cartan,
            positive_roots,
            positive_coroots,
            two_rho,
            two_rho_check,
            highest_root,
            highest_short_root,
            norms,
            root_index,
            pairing_rows,
        };
        for (name, idx) in [("highest root", rs.highest_root), ("highest short root", rs.highest_short_root)] {
            let r = rs.positive_roots[idx];
            if (0..rank).any(|i| rs.pair_simple_coroot(i, &r) < 0) {
                return Err(Error::Internal(format!("{}: {name} {r} is not dominant", rs.label)));
            }
        }
        Ok(rs)
    }

    /// Builds one of the named finite types: `A1`.., `B2`.., `C2`.., `D4`..,
    /// or `G2`.
    pub fn named(label: &str) -> Result<Self> {
        let cartan = named_cartan(label)?;
        Self::build(cartan, label.trim().to_ascii_uppercase())
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let f: CartanFile = serde_json::from_str(s).map_err(|e| invalid!("bad Cartan JSON: {e}"))?;
        Self::build(f.cartan, f.label)
    }

    /// The root system with transposed Cartan matrix, whose roots are the
    /// coroots of `self`.
    pub fn dual(&self) -> Result<Self> {
        let n = self.rank;
        let t = (0..n).map(|i| (0..n).map(|j| self.cartan[j][i]).collect()).collect();
        Self::build(t, dual_label(&self.label))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[CorootVector] {
        &self.positive_coroots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn two_rho(&self) -> RootVector {
        self.two_rho
    }

    pub fn two_rho_check(&self) -> CorootVector {
        self.two_rho_check
    }

    pub fn highest_root(&self) -> RootVector {
        self.positive_roots[self.highest_root]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root
    }

    pub fn highest_short_root(&self) -> RootVector {
        self.positive_roots[self.highest_short_root]
    }

    pub fn highest_short_root_index(&self) -> usize {
        self.highest_short_root
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        RootVector::unit(self.rank, i)
    }

    pub fn simple_coroot(&self, i: usize) -> CorootVector {
        CorootVector::unit(self.rank, i)
    }

    pub fn is_simply_laced(&self) -> bool {
        self.norms.iter().all(|&n| n == self.norms[0])
    }

    pub fn is_short(&self, root: usize) -> bool {
        self.norms[root] == self.norms[self.highest_short_root]
    }

    /// Index of a positive root in [`Self::positive_roots`].
    pub fn root_index(&self, alpha: &RootVector) -> Option<usize> {
        self.root_index.get(alpha).copied()
    }

    pub fn coroot(&self, root: usize) -> CorootVector {
        self.positive_coroots[root]
    }

    /// ⟨λ, α⟩ with rank checking.
    pub fn pair(&self, lambda: &CorootVector, alpha: &RootVector) -> Result<i32> {
        if lambda.rank() != self.rank || alpha.rank() != self.rank {
            return Err(invalid!(
                "rank mismatch: system {} has rank {}, got {} and {}",
                self.label,
                self.rank,
                lambda.rank(),
                alpha.rank()
            ));
        }
        Ok(self.pairing(lambda, alpha))
    }

    /// ⟨λ, α⟩ without rank checks.
    #[inline]
    pub fn pairing(&self, lambda: &CorootVector, alpha: &RootVector) -> i32 {
        let mut s = 0;
        for i in 0..self.rank {
            let li = lambda.coords[i];
            if li == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += li * self.cartan[j][i] * alpha.coords[j];
            }
        }
        s
    }

    /// ⟨λ, α⟩ for the positive root with index `root`.
    #[inline]
    pub fn pair_root(&self, lambda: &CorootVector, root: usize) -> i32 {
        let row = &self.pairing_rows[root];
        let mut s = 0;
        for i in 0..self.rank {
            s += lambda.coords[i] * row[i];
        }
        s
    }

    #[inline]
    fn pair_simple_coroot(&self, i: usize, alpha: &RootVector) -> i32 {
        (0..self.rank).map(|j| self.cartan[j][i] * alpha.coords[j]).sum()
    }

    /// `v − ⟨α∨, v⟩ α` where α is a positive root.
    pub fn reflect_root(&self, alpha: &RootVector, v: &RootVector) -> Result<RootVector> {
        let a = self.checked_root(alpha)?;
        self.check_rank(v.rank())?;
        Ok(*v - self.pairing(&self.positive_coroots[a], v) * *alpha)
    }

    /// `λ − ⟨λ, α⟩ α∨` where α is a positive root.
    pub fn reflect_coroot(&self, alpha: &RootVector, lambda: &CorootVector) -> Result<CorootVector> {
        let a = self.checked_root(alpha)?;
        self.check_rank(lambda.rank())?;
        Ok(self.reflect_coroot_by(a, lambda))
    }

    #[inline]
    pub fn reflect_coroot_by(&self, root: usize, lambda: &CorootVector) -> CorootVector {
        *lambda - self.pair_root(lambda, root) * self.positive_coroots[root]
    }

    #[inline]
    pub fn reflect_root_by(&self, root: usize, v: &RootVector) -> RootVector {
        *v - self.pairing(&self.positive_coroots[root], v) * self.positive_roots[root]
    }

    /// The coroot-lattice λ with `⟨λ, αᵢ⟩ = p[i]` for every simple root, if
    /// one exists.
    pub fn coroot_with_pairings(&self, p: &[i32]) -> Result<Option<CorootVector>> {
        self.check_rank(p.len())?;
        let a: Vec<Vec<i128>> = self.cartan.iter().map(|row| row.iter().map(|&c| c as i128).collect()).collect();
        let d = determinant(a.clone());
        let mut coords = Vec::with_capacity(self.rank);
        for i in 0..self.rank {
            let mut m = a.clone();
            for (j, row) in m.iter_mut().enumerate() {
                row[i] = p[j] as i128;
            }
            let di = determinant(m);
            if di % d != 0 {
                return Ok(None);
            }
            coords.push(i32::try_from(di / d).map_err(|_| invalid!("pairings {p:?} overflow"))?);
        }
        Ok(Some(CorootVector::new(&coords)?))
    }

    /// `max ⟨α∨, β⟩` over simple roots β and positive roots α.
    pub fn max_coroot_simple_pairing(&self) -> i32 {
        (0..self.num_positive_roots())
            .flat_map(|a| (0..self.rank).map(move |i| (a, i)))
            .map(|(a, i)| self.pairing(&self.positive_coroots[a], &self.simple_root(i)))
            .max()
            .unwrap_or(0)
    }

    fn checked_root(&self, alpha: &RootVector) -> Result<usize> {
        self.root_index(alpha)
            .ok_or_else(|| invalid!("{alpha} is not a positive root of {}", self.label))
    }

    fn check_rank(&self, r: usize) -> Result<()> {
        if r != self.rank {
            return Err(invalid!("rank mismatch: expected {}, got {r}", self.rank));
        }
        Ok(())
    }
}

fn validate_cartan(c: &[Vec<i32>]) -> Result<()> {
    let n = c.len();
    if n == 0 || n > MAX_RANK {
        return Err(invalid!("Cartan matrix rank must be in 1..={MAX_RANK}, got {n}"));
    }
    for (i, row) in c.iter().enumerate() {
        if row.len() != n {
            return Err(invalid!("Cartan matrix is not square (row {i} has {} entries)", row.len()));
        }
        for (j, &a) in row.iter().enumerate() {
            if i == j && a != 2 {
                return Err(invalid!("diagonal entry ({i},{j}) is {a}, expected 2"));
            }
            if i != j && a > 0 {
                return Err(invalid!("off-diagonal entry ({i},{j}) is positive ({a})"));
            }
            if i != j && (a == 0) != (c[j][i] == 0) {
                return Err(invalid!("entries ({i},{j}) and ({j},{i}) must vanish together"));
            }
        }
    }
    Ok(())
}

/// Integral squared lengths of the simple roots, `n_j` with
/// `c[i][j] n_j = c[j][i] n_i`.
fn symmetrizer(c: &[Vec<i32>]) -> Result<Vec<i64>> {
    let n = c.len();
    // rationals as (num, den)
    let mut val: Vec<Option<(i64, i64)>> = vec![None; n];
    val[0] = Some((1, 1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let (ni, di) = val[i].unwrap();
        for j in 0..n {
            if i == j || c[i][j] == 0 {
                continue;
            }
            // n_j = n_i * c[j][i] / c[i][j]
            let num = ni * c[j][i] as i64;
            let den = di * c[i][j] as i64;
            let g = gcd(num, den);
            let (num, den) = if den < 0 { (-num / g, -den / g) } else { (num / g, den / g) };
            match val[j] {
                None => {
                    val[j] = Some((num, den));
                    stack.push(j);
                }
                Some((a, b)) => {
                    if a * den != num * b {
                        return Err(invalid!("Cartan matrix is not symmetrizable"));
                    }
                }
            }
        }
    }
    if val.iter().any(Option::is_none) {
        return Err(invalid!("Cartan matrix is reducible; only irreducible systems are supported"));
    }
    let lcm = val.iter().fold(1i64, |l, v| {
        let d = v.unwrap().1;
        l / gcd(l, d) * d
    });
    Ok(val.into_iter().map(|v| v.map(|(a, b)| a * (lcm / b)).unwrap()).collect())
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

fn dual_label(label: &str) -> String {
    let upper = label.to_ascii_uppercase();
    match upper.chars().next() {
        Some('B') if upper[1..].parse::<usize>().is_ok() => format!("C{}", &upper[1..]),
        Some('C') if upper[1..].parse::<usize>().is_ok() => format!("B{}", &upper[1..]),
        Some('A' | 'D' | 'E' | 'G' | 'F') if upper[1..].parse::<usize>().is_ok() => upper,
        _ => format!("{label}^v"),
    }
}

/// Standard Cartan matrices, Bourbaki labelling.
pub fn named_cartan(label: &str) -> Result<Vec<Vec<i32>>> {
    let label = label.trim().to_ascii_uppercase();
    let unsupported = || Error::UnsupportedType(format!("unknown root system type {label:?}"));
    let mut chars = label.chars();
    let family = chars.next().ok_or_else(unsupported)?;
    let n: usize = chars.as_str().parse().map_err(|_| unsupported())?;
    if n == 0 || n > MAX_RANK {
        return Err(unsupported());
    }
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        c[i][i] = 2;
        if i + 1 < n {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    }
    match (family, n) {
        ('A', _) => {}
        ('B', n) if n >= 2 => c[n - 2][n - 1] = -2,
        ('C', n) if n >= 2 => c[n - 1][n - 2] = -2,
        ('D', n) if n >= 4 => {
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
        }
        ('G', 2) => c[1][0] = -3,
        _ => return Err(unsupported()),
    }
    Ok(c)
}

/// Integer determinant by fraction-free elimination.
fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}
