use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of variable slots in an exponent vector (x block + y block + t + q).
pub const MAX_VARS: usize = 16;

/// Dense exponent vector. Slots past the context length stay zero.
pub type Exponents = [i16; MAX_VARS];

pub const ZERO_EXPONENTS: Exponents = [0; MAX_VARS];

/// The two parameters shared by every computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    T,
    Q,
}

/// A variable, 1-based within its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
    T,
    Q,
}

impl From<Param> for Var {
    fn from(p: Param) -> Self {
        match p {
            Param::T => Var::T,
            Param::Q => Var::Q,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
            Var::T => write!(f, "t"),
            Var::Q => write!(f, "q"),
        }
    }
}

/// Fixed variable layout: `x1 > … > xn > y1 > … > ym > t > q` under lex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarContext {
    nx: u8,
    ny: u8,
}

impl VarContext {
    /// Equal-cardinality context with `n` x-variables and `n` y-variables.
    pub fn new(n: usize) -> Result<Self> {
        Self::with_counts(n, n)
    }

    pub fn with_counts(nx: usize, ny: usize) -> Result<Self> {
        if nx == 0 {
            return Err(Error::InvalidContext("at least one x variable is required".into()));
        }
        if nx + ny + 2 > MAX_VARS {
            return Err(Error::InvalidContext(format!(
                "{nx} x-variables and {ny} y-variables exceed {MAX_VARS} slots"
            )));
        }
        Ok(Self { nx: nx as u8, ny: ny as u8 })
    }

    /// Context holding only the parameters `t` and `q`.
    pub const fn parameters() -> Self {
        Self { nx: 0, ny: 0 }
    }

    pub fn nx(&self) -> usize {
        self.nx as usize
    }

    pub fn ny(&self) -> usize {
        self.ny as usize
    }

    pub fn len(&self) -> usize {
        self.nx() + self.ny() + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn t_index(&self) -> usize {
        self.nx() + self.ny()
    }

    pub fn q_index(&self) -> usize {
        self.nx() + self.ny() + 1
    }

    pub fn index(&self, v: Var) -> Result<usize> {
        match v {
            Var::X(i) if i >= 1 && i <= self.nx() => Ok(i - 1),
            Var::Y(j) if j >= 1 && j <= self.ny() => Ok(self.nx() + j - 1),
            Var::T => Ok(self.t_index()),
            Var::Q => Ok(self.q_index()),
            other => Err(Error::IndexOutOfRange(format!("{other} not in context {self:?}"))),
        }
    }

    /// Infallible variant for internal callers that already validated `v`.
    pub(crate) fn idx(&self, v: Var) -> usize {
        self.index(v).expect("variable outside context")
    }

    pub fn var_at(&self, index: usize) -> Var {
        if index < self.nx() {
            Var::X(index + 1)
        } else if index < self.nx() + self.ny() {
            Var::Y(index - self.nx() + 1)
        } else if index == self.t_index() {
            Var::T
        } else {
            Var::Q
        }
    }

    pub fn is_x_index(&self, index: usize) -> bool {
        index < self.nx()
    }

    pub fn is_y_index(&self, index: usize) -> bool {
        index >= self.nx() && index < self.nx() + self.ny()
    }

    pub fn is_parameter_index(&self, index: usize) -> bool {
        index >= self.nx() + self.ny() && index < self.len()
    }

    pub fn variables(&self) -> Vec<Var> {
        (0..self.len()).map(|i| self.var_at(i)).collect()
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.variables().iter().map(|v| v.to_string()).collect()
    }
}
