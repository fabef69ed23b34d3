use serde::{Deserialize, Serialize};

use crate::algebra::{is_homomorphism, FinAlgebra};
use crate::error::{check_size, Error, Result};
use crate::relcalc::{is_equivalence, regular_image, EquivRelation, FinMap, Relation};

/// A map `f: X → Y` sending `R`-related pairs to `S`-related pairs; the arrow
/// part `g: R → S` is `(x, x') ↦ (f x, f x')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivMorphism {
    pub r: EquivRelation,
    pub s: EquivRelation,
    pub f: FinMap,
}

impl EquivMorphism {
    pub fn new(r: EquivRelation, s: EquivRelation, f: FinMap) -> Result<Self> {
        check_size("morphism source", r.size(), f.src())?;
        check_size("morphism target", s.size(), f.dst())?;
        if let Some((x, y)) = r.pairs().find(|&(x, y)| !s.related(f.apply(x), f.apply(y))) {
            return Err(Error::InvalidArgument(format!(
                "pair ({x},{y}) of R is not sent into S"
            )));
        }
        Ok(EquivMorphism { r, s, f })
    }

    /// `g` as a map between the pair lists of `R` and `S` (lexicographic).
    pub fn arrow_map(&self) -> FinMap {
        let s_pairs: Vec<(usize, usize)> = self.s.pairs().collect();
        let table = self
            .r
            .pairs()
            .map(|(x, y)| s_pairs.binary_search(&(self.f.apply(x), self.f.apply(y))).unwrap())
            .collect();
        FinMap::new(s_pairs.len(), table).unwrap()
    }
}

/// `(f, g) = (i, j) ∘ (q, α)` with `q`, `α` surjective and `i`, `j` injective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivFactorization {
    pub q: FinMap,
    pub i: FinMap,
    /// The regular image `q(R)` on the image of `f`.
    pub image: Relation,
    pub image_is_equivalence: bool,
    /// `R → q(R)` on pair lists.
    pub alpha: FinMap,
    /// `q(R) → S` on pair lists.
    pub j: FinMap,
}

/// Factors a morphism of equivalence relations through the regular image of
/// `R` along the surjective part of `f`.
pub fn factor_equiv_morphism(mor: &EquivMorphism) -> Result<EquivFactorization> {
    let (q, i) = mor.f.image_factorization();
    let image = regular_image(&q, &mor.r.to_relation())?;
    let image_pairs: Vec<(usize, usize)> = image.pairs().collect();
    let alpha = FinMap::new(
        image_pairs.len(),
        mor.r
            .pairs()
            .map(|(x, y)| image_pairs.binary_search(&(q.apply(x), q.apply(y))).unwrap())
            .collect(),
    )?;
    let s_pairs: Vec<(usize, usize)> = mor.s.pairs().collect();
    let j = image_pairs
        .iter()
        .map(|&(a, b)| {
            s_pairs.binary_search(&(i.apply(a), i.apply(b))).map_err(|_| {
                Error::ConstructionFailed(format!("image pair ({a},{b}) does not land in S"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let j = FinMap::new(s_pairs.len(), j)?;
    Ok(EquivFactorization {
        image_is_equivalence: is_equivalence(&image)?.is_equivalence(),
        q,
        i,
        image,
        alpha,
        j,
    })
}

/// A commuting square of split epimorphisms against surjections:
///
/// ```text
///   X --α--> U
///  f|↑s     g|↑t
///   Y --β--> W
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSquare {
    pub f: FinMap,
    pub s: FinMap,
    pub alpha: FinMap,
    pub g: FinMap,
    pub t: FinMap,
    pub beta: FinMap,
}

impl SplitSquare {
    /// Checks `f∘s = 1`, `g∘t = 1`, `g∘α = β∘f`, `α∘s = t∘β`, surjectivity of
    /// `α` and `β` and, given the four algebras `[X, Y, U, W]`, that every map
    /// is a homomorphism.
    pub fn new(
        f: FinMap,
        s: FinMap,
        alpha: FinMap,
        g: FinMap,
        t: FinMap,
        beta: FinMap,
        algebras: Option<[&FinAlgebra; 4]>,
    ) -> Result<Self> {
        let (x, y, u, w) = (f.src(), f.dst(), g.src(), g.dst());
        check_size("section s", y, s.src())?;
        check_size("section s target", x, s.dst())?;
        check_size("alpha", x, alpha.src())?;
        check_size("alpha target", u, alpha.dst())?;
        check_size("section t", w, t.src())?;
        check_size("section t target", u, t.dst())?;
        check_size("beta", y, beta.src())?;
        check_size("beta target", w, beta.dst())?;
        if s.then(&f)? != FinMap::identity(y) || t.then(&g)? != FinMap::identity(w) {
            return Err(Error::InvalidArgument("s and t must be sections of f and g".into()));
        }
        if alpha.then(&g)? != f.then(&beta)? {
            return Err(Error::NonCommutingSquare("g∘α differs from β∘f".into()));
        }
        if s.then(&alpha)? != beta.then(&t)? {
            return Err(Error::NonCommutingSquare("α∘s differs from t∘β".into()));
        }
        if !alpha.is_surjective() || !beta.is_surjective() {
            return Err(Error::InvalidArgument("α and β must be surjective".into()));
        }
        if let Some([ax, ay, au, aw]) = algebras {
            let maps = [
                ("f", &f, ax, ay),
                ("s", &s, ay, ax),
                ("α", &alpha, ax, au),
                ("g", &g, au, aw),
                ("t", &t, aw, au),
                ("β", &beta, ay, aw),
            ];
            for (name, map, a, b) in maps {
                if let Some((op, args)) = is_homomorphism(map, a, b)?.witness {
                    return Err(Error::InvalidArgument(format!("{name} does not preserve `{op}` at {args:?}")));
                }
            }
        }
        Ok(SplitSquare { f, s, alpha, g, t, beta })
    }
}

/// The comparison `λ: Eq(f) → Eq(g)`, `(x, x') ↦ (α x, α x')`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelMapReport {
    /// Images of the pairs of `Eq(f)`, in lexicographic order of the source.
    pub lambda: Vec<((usize, usize), (usize, usize))>,
    pub surjective: bool,
    /// The first pair of `Eq(g)` outside the image of `λ`.
    pub missing: Option<(usize, usize)>,
}

pub fn induced_kernel_map(square: &SplitSquare) -> KernelMapReport {
    let (eq_f, eq_g) = (square.f.kernel_pair(), square.g.kernel_pair());
    let a = &square.alpha;
    let lambda: Vec<_> = eq_f.pairs().map(|(x, y)| ((x, y), (a.apply(x), a.apply(y)))).collect();
    let hit = Relation::from_pairs(eq_g.size(), eq_g.size(), lambda.iter().map(|p| p.1))
        .expect("λ stays within U");
    let missing = eq_g.pairs().find(|&(u, v)| !hit.contains(u, v));
    KernelMapReport {
        lambda,
        surjective: missing.is_none(),
        missing,
    }
}
