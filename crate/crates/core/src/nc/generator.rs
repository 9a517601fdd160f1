use std::fmt;

/// Which family of matrix elements a generator belongs to.
///
/// The declaration order is the generator order used for normal words:
/// `t < tbar < s < a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    /// Lower-triangular `t_ij` of `U_q(gl_N)`; diagonal ones carry an exponent.
    T,
    /// Upper-triangular `tbar_ij` of `U_q(gl_N)` (off-diagonal only).
    TBar,
    /// Matrix elements `s_ij` of a twisted algebra.
    S,
    /// Commutative Poisson variable `a_ij`.
    A,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::T => "t",
            Kind::TBar => "tbar",
            Kind::S => "s",
            Kind::A => "a",
        }
    }

    pub fn from_name(s: &str) -> Option<Kind> {
        Some(match s {
            "t" => Kind::T,
            "tbar" => Kind::TBar,
            "s" => Kind::S,
            "a" => Kind::A,
            _ => return None,
        })
    }
}

/// A generator `kind[i,j]`, with a signed power for the diagonal `t[i,i]`.
///
/// `tbar[i,i]` is stored as `t[i,i]^-1`, which gives the diagonal elements
/// exact inverses. Every other generator has `exp == 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gen {
    pub kind: Kind,
    pub i: u8,
    pub j: u8,
    pub exp: i8,
}

/// Position of a generator in the normal order, ignoring its exponent.
pub type GenKey = (Kind, u8, u8);

impl Gen {
    pub fn new(kind: Kind, i: usize, j: usize) -> Gen {
        Gen {
            kind,
            i: i as u8,
            j: j as u8,
            exp: 1,
        }
    }

    pub fn s(i: usize, j: usize) -> Gen {
        Gen::new(Kind::S, i, j)
    }

    pub fn t(i: usize, j: usize) -> Gen {
        Gen::new(Kind::T, i, j)
    }

    pub fn tbar(i: usize, j: usize) -> Gen {
        Gen::new(Kind::TBar, i, j)
    }

    /// `t[i,i]^e`.
    pub fn diag(i: usize, exp: i8) -> Gen {
        Gen {
            kind: Kind::T,
            i: i as u8,
            j: i as u8,
            exp,
        }
    }

    pub fn key(&self) -> GenKey {
        (self.kind, self.i, self.j)
    }

    /// True for the invertible diagonal `t[i,i]^e`.
    pub fn is_diag(&self) -> bool {
        self.kind == Kind::T && self.i == self.j
    }

    pub fn with_exp(self, exp: i8) -> Gen {
        Gen { exp, ..self }
    }

    pub fn row(&self) -> usize {
        self.i as usize
    }

    pub fn col(&self) -> usize {
        self.j as usize
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{},{}]", self.kind.name(), self.i, self.j)?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A product of generators, read left to right. The empty word is the unit.
pub type Word = Vec<Gen>;

/// `g1*g2*...`, or `1` for the empty word.
pub fn word_to_string(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join("*")
}

/// A word is normal when its keys are non-decreasing and no two adjacent
/// diagonal powers share an index.
pub fn is_normal(w: &[Gen]) -> bool {
    w.windows(2).all(|p| match p[0].key().cmp(&p[1].key()) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Equal => !p[0].is_diag(),
        std::cmp::Ordering::Greater => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kind_then_indices() {
        assert!(Gen::t(3, 1) < Gen::tbar(1, 2));
        assert!(Gen::tbar(2, 3) < Gen::s(2, 1));
        assert!(Gen::s(2, 1) < Gen::s(3, 1));
        assert!(Gen::s(3, 1) < Gen::s(3, 2));
        assert!(Gen::diag(1, 1) < Gen::t(2, 1));
    }

    #[test]
    fn normality() {
        assert!(is_normal(&[Gen::s(2, 1), Gen::s(2, 1), Gen::s(3, 2)]));
        assert!(!is_normal(&[Gen::s(3, 2), Gen::s(2, 1)]));
        assert!(!is_normal(&[Gen::diag(1, 1), Gen::diag(1, -1)]));
        assert!(is_normal(&[]));
        assert_eq!(word_to_string(&[Gen::diag(2, -1), Gen::s(2, 1)]), "t[2,2]^-1*s[2,1]");
    }
}
