use serde_json::{json, Value};

use crate::frobdem::sylvester;
use crate::haiman::{key_det, KeyShape};
use crate::polycore::{Poly, RowReducer, Weight};

use super::{DeformedRing, GradedIdeal, IdealError, IdealWindow};

/// The complex `E_(a,(b,0)) -> ... -> q^(s(s-1)) t^s E_(a,(b-s,s)) -> ... -> q^(b(b-1)) t^b E_(a,(0,b))`
/// whose terms split the second color into `L` (first `b-s` letters) and `B` (last `s`), and
/// its subcomplex of ideals generated by the key generators of `(a, b-s)` on `X1 u L`.
pub struct DigonComplexData {
    a: usize,
    b: usize,
    terms: Vec<DeformedRing>,
    ideals: Vec<GradedIdeal>,
    window: IdealWindow,
}

/// Outcome of the checks, each over every graded piece of the window.
#[derive(Clone, Debug)]
pub struct DigonReport {
    pub a: usize,
    pub b: usize,
    pub window: IdealWindow,
    pub pieces: usize,
    pub square_zero: bool,
    pub ideal_preserved: bool,
    pub ambient_exact: bool,
    /// `k d + d k = sign * id`, with the sign found on the first nonzero element.
    pub homotopy_sign: Option<i32>,
    pub homotopy_ok: bool,
    /// Exactness of the ideal subcomplex at positions `0..b-1`.
    pub ideal_exact: Vec<bool>,
    pub failures: Vec<String>,
}

impl DigonReport {
    pub fn ok(&self) -> bool {
        self.square_zero
            && self.ideal_preserved
            && self.ambient_exact
            && self.homotopy_ok
            && self.ideal_exact.iter().all(|&e| e)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a, "b": self.b, "window": self.window.to_json(), "pieces": self.pieces,
            "square_zero": self.square_zero, "ideal_preserved": self.ideal_preserved,
            "ambient_exact": self.ambient_exact, "homotopy_sign": self.homotopy_sign, "homotopy_ok": self.homotopy_ok,
            "ideal_exact": self.ideal_exact, "failures": self.failures, "ok": self.ok(),
        })
    }
}

pub fn digon_complex(a: usize, b: usize, window: IdealWindow) -> Result<DigonComplexData, IdealError> {
    if a < b || b == 0 {
        return Err(IdealError::Colors(vec![a, b]));
    }
    let base = DeformedRing::new(&[a, b])?;
    let mut terms = Vec::new();
    let mut ideals = Vec::new();
    for s in 0..=b {
        let blocks: Vec<usize> = [a, b - s, s].into_iter().filter(|&n| n > 0).collect();
        let ring = base.regrouped(&blocks)?;
        let n = a + b - s;
        let x = ring.x().slice("X1L", 0..n);
        let y = ring.y().slice("Y1L", 0..n);
        let denominator = &ring.x().slice("X1", 0..a).vandermonde() * &ring.x().slice("L", a..n).vandermonde();
        let mut gens = Vec::new();
        for key in KeyShape::all(a, b - s) {
            gens.push(ring.expand(&key_det(&key, &x, &y)?).div_exact(&denominator)?);
        }
        ideals.push(GradedIdeal::new(&ring, gens, window)?);
        terms.push(ring);
    }
    Ok(DigonComplexData { a, b, terms, ideals, window })
}

impl DigonComplexData {
    pub fn term(&self, s: usize) -> &DeformedRing {
        &self.terms[s]
    }

    pub fn ideal(&self, s: usize) -> &GradedIdeal {
        &self.ideals[s]
    }

    /// `q^(s(s-1)) t^s`.
    pub fn shift(s: usize) -> Weight {
        Weight::qt((s * s.saturating_sub(1)) as i32, s as i32)
    }

    /// `d_s`: the Sylvester operator merging `x_(a+b-s)` into `B`, of degree `q^(-2s)`.
    pub fn differential(&self, s: usize, f: &Poly) -> Result<Poly, IdealError> {
        if s == 0 {
            return Ok(f.clone());
        }
        let n = self.a + self.b;
        let alpha = self.terms[0].x().slice("xB", n - s - 1..n);
        Ok(sylvester(&alpha, 1, s, f)?)
    }

    /// `k_s`: splits the first letter off `B`, multiplies by its `(b-1)`-st power and merges it
    /// into `L`, with sign `(-1)^(b-s)`.
    pub fn homotopy(&self, s: usize, f: &Poly) -> Result<Poly, IdealError> {
        let (a, b) = (self.a, self.b);
        let letter = self.terms[0].x().var(a + b - s);
        let g = &letter.pow(b as u32 - 1) * f;
        let merged =
            if s == b { g } else { sylvester(&self.terms[0].x().slice("Lx", a..a + b - s + 1), b - s, 1, &g)? };
        Ok(merged.negate_if((b - s) % 2 == 1))
    }

    /// Internal weight of position `s` in total weight `(q, t)`.
    fn internal(s: usize, q: i32, t: i32) -> Weight {
        Weight::qt(q - (s * s.saturating_sub(1)) as i32, t)
    }

    fn rank_of_image(&self, s: usize, basis: &[Poly]) -> Result<usize, IdealError> {
        let mut red = RowReducer::new(self.terms[0].ring(), false);
        for f in basis {
            red.insert(&self.differential(s, f)?);
        }
        Ok(red.rank())
    }

    /// Runs every check over the window.
    pub fn verify(&self) -> Result<DigonReport, IdealError> {
        let (a, b) = (self.a, self.b);
        let kmax = a as i32;
        let mut report = DigonReport {
            a,
            b,
            window: self.window,
            pieces: 0,
            square_zero: true,
            ideal_preserved: true,
            ambient_exact: true,
            homotopy_sign: None,
            homotopy_ok: true,
            ideal_exact: vec![true; b],
            failures: Vec::new(),
        };
        for deg in 0..=self.window.vmax as i32 {
            let t = 2 * deg;
            let mut q = -2 * kmax * deg;
            while q <= self.window.qmax {
                let weights: Vec<Weight> = (0..=b).map(|s| Self::internal(s, q, t)).collect();
                let bases: Vec<Vec<Poly>> = (0..=b).map(|s| self.terms[s].basis(weights[s])).collect();
                if bases.iter().all(Vec::is_empty) {
                    q += 2;
                    continue;
                }
                report.pieces += 1;
                let at = format!("q^{q} t^{t}");

                let mut ranks = Vec::new();
                for s in 0..b {
                    ranks.push(self.rank_of_image(s, &bases[s])?);
                }
                for s in 0..=b {
                    let incoming = if s == 0 { 0 } else { ranks[s - 1] };
                    let outgoing = if s == b { 0 } else { ranks[s] };
                    if bases[s].len() - outgoing != incoming {
                        report.ambient_exact = false;
                        report.failures.push(format!("ambient not exact at position {s}, {at}"));
                    }
                }

                for s in 0..b.saturating_sub(1) {
                    for f in &bases[s] {
                        if !self.differential(s + 1, &self.differential(s, f)?)?.is_zero() {
                            report.square_zero = false;
                            report.failures.push(format!("d{} d{s} nonzero on {}, {at}", s + 1, f.to_text()));
                        }
                    }
                }

                for s in 0..=b {
                    for f in &bases[s] {
                        let mut h = Poly::zero(f.ring());
                        if s < b {
                            h.add_assign_ref(&self.homotopy(s + 1, &self.differential(s, f)?)?);
                        }
                        if s > 0 {
                            h.add_assign_ref(&self.differential(s - 1, &self.homotopy(s, f)?)?);
                        }
                        let sign = match report.homotopy_sign {
                            Some(c) => c,
                            None => {
                                let c = if h == *f { 1 } else { -1 };
                                report.homotopy_sign = Some(c);
                                c
                            }
                        };
                        if h != f.clone().negate_if(sign < 0) {
                            report.homotopy_ok = false;
                            report.failures.push(format!("homotopy fails at position {s} on {}, {at}", f.to_text()));
                        }
                    }
                }

                let jbases: Vec<Vec<Poly>> =
                    (0..=b).map(|s| self.ideals[s].piece_basis(weights[s])).collect::<Result<_, _>>()?;
                let mut jranks = Vec::new();
                for s in 0..b {
                    jranks.push(self.rank_of_image(s, &jbases[s])?);
                    for g in &jbases[s] {
                        let image = self.differential(s, g)?;
                        if !self.ideals[s + 1].membership(&image)?.member {
                            report.ideal_preserved = false;
                            report.failures.push(format!("d{s} leaves the ideal on {}, {at}", g.to_text()));
                        }
                    }
                }
                for s in 0..b {
                    let incoming = if s == 0 { 0 } else { jranks[s - 1] };
                    if jbases[s].len() - jranks[s] != incoming {
                        report.ideal_exact[s] = false;
                        report.failures.push(format!("ideal subcomplex not exact at position {s}, {at}"));
                    }
                }
                q += 2;
            }
        }
        Ok(report)
    }
}
