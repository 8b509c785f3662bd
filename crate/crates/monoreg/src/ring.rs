use std::cmp::Ordering;
use std::fmt;

/// A polynomial ring presented by its variables.
///
/// Contexts are compared structurally: two contexts are interchangeable only
/// if they declare the same variables in the same order. Printing and parsing
/// round-trip through the stored names, so a context created with
/// [`RingContext::new`] uses the default names `x1, x2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    var_names: Vec<String>,
}

impl RingContext {
    /// Ring in `num_vars` variables named `x1..x{num_vars}`.
    pub fn new(num_vars: usize) -> Self {
        assert!(num_vars >= 1, "a ring context needs at least one variable");
        RingContext {
            var_names: (1..=num_vars).map(|i| format!("x{i}")).collect(),
        }
    }

    /// Ring with explicit variable names. Names must be non-empty and distinct.
    pub fn with_names(var_names: Vec<String>) -> Self {
        assert!(!var_names.is_empty(), "a ring context needs at least one variable");
        for (i, a) in var_names.iter().enumerate() {
            assert!(!a.is_empty(), "variable names must be non-empty");
            for b in &var_names[..i] {
                assert!(a != b, "duplicate variable name {a:?}");
            }
        }
        RingContext { var_names }
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.var_names[index]
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    /// Index of a variable by name, if declared.
    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.var_names.iter().position(|v| v == name)
    }

    /// Short description used in mismatch errors.
    pub fn describe(&self) -> String {
        self.var_names.join(",")
    }
}

/// A monomial, stored as its exponent vector.
///
/// The ordering sorts canonically for presentation: ascending total degree,
/// and within a degree the monomial with the larger power of the earliest
/// variable comes first (so `(x,y)^2` lists as `x^2, x*y, y^2`). This is the
/// generator order used everywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "monomials need at least one variable slot");
        Monomial { exponents }
    }

    /// The monomial 1.
    pub fn unit(num_vars: usize) -> Self {
        Monomial::new(vec![0; num_vars])
    }

    /// The single variable `x_index`.
    pub fn variable(index: usize, num_vars: usize) -> Self {
        Monomial::pure_power(index, 1, num_vars)
    }

    /// `x_index ^ exp`.
    pub fn pure_power(index: usize, exp: u32, num_vars: usize) -> Self {
        assert!(index < num_vars);
        let mut exponents = vec![0; num_vars];
        exponents[index] = exp;
        Monomial::new(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|&(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exponents.iter().filter(|&&e| e > 0).count()
    }

    /// If this is `x_i^e` for a single variable, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn disjoint_support(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Monomial {
        Monomial::new(self.exponents.iter().map(|e| e * n).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), other.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, m)`: componentwise saturating subtraction. This is
    /// the generator image under the colon by `m`.
    pub fn colon_by(&self, m: &Monomial) -> Monomial {
        assert_eq!(self.num_vars(), m.num_vars());
        Monomial::new(
            self.exponents
                .iter()
                .zip(&m.exponents)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Renders with the context's variable names, e.g. `x^2*y`; the unit
    /// monomial renders as `1`.
    pub fn render(&self, ctx: &RingContext) -> String {
        assert_eq!(self.num_vars(), ctx.num_vars());
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(ctx.var_name(i).to_string()),
                _ => parts.push(format!("{}^{}", ctx.var_name(i), e)),
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            // Reversed lexicographic comparison: within a degree, a higher
            // power of an earlier variable sorts first.
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// Positional form independent of any context, e.g. `(2,0,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let a = Monomial::new(vec![2, 0]); // x^2
        let b = Monomial::new(vec![0, 1]); // y
        let c = Monomial::new(vec![1, 1]); // xy
        let d = Monomial::new(vec![0, 2]); // y^2
        assert!(b < a, "degree dominates");
        assert!(a < c, "within a degree, higher power of x1 sorts first");
        assert!(c < d);
        let mut v = vec![d.clone(), a.clone(), b.clone(), c.clone()];
        v.sort();
        assert_eq!(v, vec![b, a, c, d]);
    }

    #[test]
    fn divisibility_and_lattice_ops() {
        let xy = Monomial::new(vec![1, 1, 0]);
        let x2z = Monomial::new(vec![2, 0, 1]);
        assert!(!xy.divides(&x2z));
        assert!(Monomial::unit(3).divides(&x2z));
        assert_eq!(xy.lcm(&x2z), Monomial::new(vec![2, 1, 1]));
        assert_eq!(xy.gcd(&x2z), Monomial::new(vec![1, 0, 0]));
        assert_eq!(xy.mul(&x2z), Monomial::new(vec![3, 1, 1]));
        assert_eq!(x2z.colon_by(&xy), Monomial::new(vec![1, 0, 1]));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(Monomial::new(vec![0, 3, 0]).as_pure_power(), Some((1, 3)));
        assert_eq!(Monomial::new(vec![1, 3, 0]).as_pure_power(), None);
        assert_eq!(Monomial::unit(3).as_pure_power(), None);
    }

    #[test]
    fn rendering() {
        let ctx = RingContext::with_names(vec!["x".into(), "y".into(), "z".into()]);
        assert_eq!(Monomial::new(vec![2, 1, 0]).render(&ctx), "x^2*y");
        assert_eq!(Monomial::unit(3).render(&ctx), "1");
        let default_ctx = RingContext::new(2);
        assert_eq!(Monomial::new(vec![0, 4]).render(&default_ctx), "x2^4");
    }

    #[test]
    fn default_names_round_trip_identity() {
        let ctx = RingContext::new(3);
        assert_eq!(ctx.var_names(), &["x1", "x2", "x3"]);
        assert_eq!(ctx.var_index("x2"), Some(1));
        assert_eq!(ctx.var_index("y"), None);
    }
}
