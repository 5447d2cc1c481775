use std::fmt;
use std::sync::{Arc, LazyLock};

use crate::error::{PgaError, Result};

/// Largest supported 1-vector dimension. Blades are stored as `u16` masks and
/// coefficient storage is dense, so this stays small.
pub const MAX_DIM: usize = 8;

/// Signature `(p, m, z)` of a real Clifford algebra.
///
/// Basis 1-vectors are ordered with the `z` null vectors first, then the `p`
/// positive ones, then the `m` negative ones. For euclidean PGA this puts
/// `e0` (squaring to 0) at index 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AlgebraDescriptor {
    pub p: usize,
    pub m: usize,
    pub z: usize,
}

impl AlgebraDescriptor {
    pub fn new(p: usize, m: usize, z: usize) -> Result<Self> {
        let dim = p + m + z;
        if dim == 0 || dim > MAX_DIM {
            return Err(PgaError::InvalidSignature(format!(
                "dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        Ok(Self { p, m, z })
    }

    /// Euclidean PGA of dimension `n`: signature `(n, 0, 1)`.
    pub fn euclidean_pga(n: usize) -> Result<Self> {
        Self::new(n, 0, 1)
    }

    pub fn dim(&self) -> usize {
        self.p + self.m + self.z
    }

    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Square of each basis 1-vector, in index order.
    pub fn squares(&self) -> Vec<i8> {
        let mut s = vec![0i8; self.z];
        s.extend(std::iter::repeat_n(1, self.p));
        s.extend(std::iter::repeat_n(-1, self.m));
        s
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{},{})", self.p, self.m, self.z)
    }
}

/// A basis blade: bit `i` set means `e_i` is a factor, factors in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Blade(pub u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Basis vector indices in ascending order.
    pub fn factors(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |i| self.0 & (1 << i) != 0)
    }

    pub fn name(self) -> String {
        if self.0 == 0 {
            return "1".to_owned();
        }
        let mut s = String::from("e");
        for i in self.factors() {
            s.push_str(&i.to_string());
        }
        s
    }
}

/// Sign from reordering the concatenated factor list of `a` then `b` into
/// ascending order, ignoring the metric.
pub fn reorder_sign(a: u16, b: u16) -> f64 {
    let mut a = a >> 1;
    let mut swaps = 0u32;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// A concrete algebra: signature plus precomputed product and duality tables.
#[derive(Debug)]
pub struct Algebra {
    desc: AlgebraDescriptor,
    squares: Vec<i8>,
    /// `product[i * n + j]` is `(sign, mask)` of `blade_i * blade_j`.
    product: Vec<(f64, u16)>,
    /// `dual_sign[i]` is `s` with `blade_i ^ (s * complement_i) = +I`.
    dual_sign: Vec<f64>,
    /// Blades in display order: by grade, then lexicographically by indices.
    order: Vec<Blade>,
    perturbed: Option<(u16, u16)>,
}

impl Algebra {
    pub fn new(desc: AlgebraDescriptor) -> Self {
        let n = desc.blade_count();
        let squares = desc.squares();
        let mut product = Vec::with_capacity(n * n);
        for a in 0..n as u16 {
            for b in 0..n as u16 {
                let mut sign = reorder_sign(a, b);
                let common = a & b;
                for (i, sq) in squares.iter().enumerate() {
                    if common & (1 << i) != 0 {
                        sign *= f64::from(*sq);
                    }
                }
                product.push((sign, a ^ b));
            }
        }
        let full = (n - 1) as u16;
        let dual_sign = (0..n as u16)
            .map(|a| reorder_sign(a, full ^ a))
            .collect();
        let mut order: Vec<Blade> = (0..n as u16).map(Blade).collect();
        order.sort_by_key(|b| (b.grade(), b.factors().collect::<Vec<_>>()));
        Self {
            desc,
            squares,
            product,
            dual_sign,
            order,
            perturbed: None,
        }
    }

    /// Test fixture: an algebra whose product table has the sign of one
    /// basis-blade product (and only that ordered pair) flipped.
    ///
    /// Used as a negative control by the verification suites.
    pub fn with_flipped_sign(desc: AlgebraDescriptor, a: Blade, b: Blade) -> Self {
        let mut alg = Self::new(desc);
        let n = desc.blade_count();
        alg.product[a.index() * n + b.index()].0 *= -1.0;
        alg.perturbed = Some((a.0, b.0));
        alg
    }

    pub fn descriptor(&self) -> AlgebraDescriptor {
        self.desc
    }

    pub fn dim(&self) -> usize {
        self.desc.dim()
    }

    pub fn blade_count(&self) -> usize {
        self.desc.blade_count()
    }

    pub fn squares(&self) -> &[i8] {
        &self.squares
    }

    pub fn pseudoscalar_blade(&self) -> Blade {
        Blade((self.blade_count() - 1) as u16)
    }

    pub fn is_perturbed(&self) -> bool {
        self.perturbed.is_some()
    }

    /// Geometric product of two basis blades as `(sign, blade)`; sign 0 when a
    /// repeated null vector annihilates the product.
    #[inline]
    pub fn blade_product(&self, a: Blade, b: Blade) -> (f64, Blade) {
        let (s, m) = self.product[a.index() * self.blade_count() + b.index()];
        (s, Blade(m))
    }

    #[inline]
    pub(crate) fn product_entry(&self, i: usize, j: usize) -> (f64, u16) {
        self.product[i * self.blade_count() + j]
    }

    /// Sign `s` such that `blade ^ (s * complement) = +I`.
    #[inline]
    pub fn dual_sign(&self, a: Blade) -> f64 {
        self.dual_sign[a.index()]
    }

    pub fn blades(&self) -> &[Blade] {
        &self.order
    }

    pub fn blade_by_name(&self, name: &str) -> Result<Blade> {
        self.order
            .iter()
            .copied()
            .find(|b| b.name() == name)
            .ok_or_else(|| PgaError::UnknownBlade(name.to_owned()))
    }

    /// Whether `other` has the same signature and the same product table.
    pub fn same_as(&self, other: &Algebra) -> bool {
        self.desc == other.desc && self.perturbed == other.perturbed
    }

    pub fn label(&self) -> String {
        match self.perturbed {
            None => self.desc.to_string(),
            Some((a, b)) => format!(
                "{}[flipped {}*{}]",
                self.desc,
                Blade(a).name(),
                Blade(b).name()
            ),
        }
    }
}

static PGA2: LazyLock<Arc<Algebra>> =
    LazyLock::new(|| Arc::new(Algebra::new(AlgebraDescriptor { p: 2, m: 0, z: 1 })));
static PGA3: LazyLock<Arc<Algebra>> =
    LazyLock::new(|| Arc::new(Algebra::new(AlgebraDescriptor { p: 3, m: 0, z: 1 })));

/// The shared Cl*(2,0,1) instance.
pub fn pga2() -> Arc<Algebra> {
    Arc::clone(&PGA2)
}

/// The shared Cl*(3,0,1) instance.
pub fn pga3() -> Arc<Algebra> {
    Arc::clone(&PGA3)
}
