use std::fmt;

/// Weakly decreasing list of positive parts (trailing zeros dropped).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts and drops zeros.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Self {
        let mut parts: Vec<u32> = parts.into_iter().filter(|&p| p > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Hook `(i|j)` = `(i+1, 1^j)`.
    pub fn hook(i: u32, j: u32) -> Self {
        let mut parts = vec![i + 1];
        parts.extend(std::iter::repeat_n(1, j as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.parts.len() <= rows && self.parts.iter().all(|&p| p <= cols)
    }

    pub fn conjugate(&self) -> Partition {
        let m = self.part(0);
        Partition::new((1..=m).map(|k| self.parts.iter().filter(|&&p| p >= k).count() as u32))
    }

    /// Exponents `part(i) + n - 1 - i` for `i < n`: the monomial list of length `n`.
    pub fn staircase_exponents(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i) + (n - 1 - i) as u32).collect()
    }

    /// The partition in the `cols x rows` box whose monomial list of length `cols`
    /// is the complement of this one's (length `rows`) in `{0, ..., rows+cols-1}`.
    pub fn dual_complement(&self, rows: usize, cols: u32) -> Partition {
        assert!(self.fits(rows, cols), "partition {self} does not fit in {rows}x{cols}");
        let n = rows + cols as usize;
        let mine = self.staircase_exponents(rows);
        let mut rest: Vec<u32> = (0..n as u32).filter(|e| !mine.contains(e)).collect();
        rest.sort_unstable_by(|a, b| b.cmp(a));
        let c = cols as usize;
        Partition::new(rest.iter().enumerate().map(|(i, &e)| e - (c - 1 - i) as u32))
    }

    /// All partitions with at most `rows` parts, each at most `cols`, in a fixed order.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.iter().copied()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// Parses `2,1` or `[2,1]` or empty.
    pub fn parse(s: &str) -> Result<Partition, String> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if s.is_empty() || s == "()" {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|p| p.trim().parse::<u32>()).collect();
        let parts = parts.map_err(|e| format!("bad partition {s:?}: {e}"))?;
        let p = Partition::new(parts.iter().copied());
        if p.parts != parts.into_iter().filter(|&x| x > 0).collect::<Vec<_>>() {
            return Err(format!("partition {s:?} is not weakly decreasing"));
        }
        Ok(p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
