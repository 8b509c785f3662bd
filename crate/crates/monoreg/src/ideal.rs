use crate::error::{Error, Result};
use crate::ring::{Monomial, RingContext};

/// A monomial ideal held in canonical form: the unique minimal monomial
/// generating set (a divisibility antichain), sorted graded-lexicographically.
///
/// The zero ideal is the empty generator list. The unit ideal is not
/// representable: constructors reject the monomial `1` among generators.
/// Because the stored form is canonical, derived equality and hashing agree
/// with ideal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing the list.
    /// Rejects the unit monomial with [`Error::UnitIdeal`].
    pub fn new(ctx: RingContext, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            assert_eq!(
                g.num_vars(),
                ctx.num_vars(),
                "generator arity does not match the ring context"
            );
            if g.is_unit() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(MonomialIdeal {
            ctx,
            gens: minimalize(gens),
        })
    }

    /// The zero ideal.
    pub fn zero(ctx: RingContext) -> Self {
        MonomialIdeal { ctx, gens: Vec::new() }
    }

    /// The principal ideal `(m)`.
    pub fn principal(ctx: RingContext, m: Monomial) -> Result<Self> {
        MonomialIdeal::new(ctx, vec![m])
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    /// The minimal generators, sorted graded-lexicographically.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Degrees of the minimal generators, sorted descending.
    pub fn generator_degrees_desc(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.gens.iter().map(Monomial::degree).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Whether any variable of `support` appears in a generator.
    pub fn uses_variable(&self, index: usize) -> bool {
        self.gens.iter().any(|g| g.exponents()[index] > 0)
    }

    /// Membership test for a monomial: some generator divides it.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        assert_eq!(m.num_vars(), self.ctx.num_vars());
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment: every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_ctx(other)?;
        Ok(other.gens.iter().all(|g| self.contains_monomial(g)))
    }

    fn check_ctx(&self, other: &MonomialIdeal) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.describe(),
                right: other.ctx.describe(),
            });
        }
        Ok(())
    }

    /// Product `I * J`: pairwise products of generators, minimalized.
    /// Either factor zero gives zero.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                prods.push(g.mul(h));
            }
        }
        MonomialIdeal::new(self.ctx.clone(), prods)
    }

    /// Power `I^n` for `n >= 1`. `n = 0` would be the unit ideal, which is
    /// outside the domain: [`Error::UnitIdeal`].
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        if n == 0 {
            return Err(Error::UnitIdeal);
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// Sum `I + J`: union of generators, minimalized.
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ctx.clone(), gens)
    }

    /// Intersection `I ∩ J`: pairwise lcms of generators, minimalized.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                lcms.push(g.lcm(h));
            }
        }
        MonomialIdeal::new(self.ctx.clone(), lcms)
    }

    /// Colon by a monomial, `I : m = ({ g / gcd(g, m) })`.
    /// If the result would be the unit ideal (i.e. `m ∈ I`), returns
    /// [`Error::ColonIsUnit`]; the zero ideal passes through unchanged.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        assert_eq!(m.num_vars(), self.ctx.num_vars());
        let mut quots = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let q = g.colon_by(m);
            if q.is_unit() {
                return Err(Error::ColonIsUnit);
            }
            quots.push(q);
        }
        MonomialIdeal::new(self.ctx.clone(), quots)
    }

    /// Colon by an ideal, `I : J = ∩_h (I : h)` over the generators `h` of
    /// `J`. Generators whose colon is the whole ring are skipped; if every
    /// colon is the whole ring the result is the unit ideal and
    /// [`Error::ColonIsUnit`] is returned. `J = 0` is rejected with
    /// [`Error::ColonByZero`].
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ctx(other)?;
        if other.is_zero() {
            return Err(Error::ColonByZero);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for h in &other.gens {
            match self.colon_monomial(h) {
                Ok(q) => {
                    acc = Some(match acc {
                        None => q,
                        Some(a) => a.intersect(&q)?,
                    });
                }
                Err(Error::ColonIsUnit) => continue,
                Err(e) => return Err(e),
            }
        }
        acc.ok_or(Error::ColonIsUnit)
    }

    /// Scale by a monomial: `m * I`. Multiplying an antichain by a fixed
    /// monomial preserves the antichain, so no minimalization is needed.
    pub fn scale(&self, m: &Monomial) -> MonomialIdeal {
        assert_eq!(m.num_vars(), self.ctx.num_vars());
        let mut gens: Vec<Monomial> = self.gens.iter().map(|g| g.mul(m)).collect();
        gens.sort_unstable();
        MonomialIdeal { ctx: self.ctx.clone(), gens }
    }

    /// Whether the minimal generators form a regular sequence. For monomials
    /// this holds exactly when the generator supports are pairwise disjoint.
    /// Undefined for the zero ideal.
    pub fn is_regular_sequence(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        for (i, g) in self.gens.iter().enumerate() {
            for h in &self.gens[..i] {
                if !g.disjoint_support(h) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether this is a pure power complete intersection: every minimal
    /// generator is a power of a single variable (distinctness of the
    /// variables follows from minimality). Undefined for the zero ideal.
    pub fn is_pure_power_ci(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        Ok(self.gens.iter().all(|g| g.as_pure_power().is_some()))
    }

    /// Renders as `(g1,g2,...)` using the context's variable names;
    /// the zero ideal renders as `(0)`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(&self.ctx)).collect();
        format!("({})", parts.join(","))
    }
}

/// Reduces a generator list to the unique sorted divisibility antichain.
fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut keep = Vec::with_capacity(gens.len());
    'outer: for (i, g) in gens.iter().enumerate() {
        // Only earlier (graded-lex smaller) entries can strictly divide g;
        // a proper divisor has strictly smaller degree or is lex-smaller.
        for h in &gens[..i] {
            if h.divides(g) {
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }
    keep
}
