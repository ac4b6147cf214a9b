//! Signed log-magnitude arithmetic for Γ-ratio prefactors that overflow
//! direct evaluation (D up to 10⁴ puts Γ arguments far beyond 170).

/// A real number represented as sign · exp(log_abs). `sign == 0` means exact
/// zero and `log_abs` is ignored.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogSigned {
    pub log_abs: f64,
    pub sign: i8,
}

impl LogSigned {
    pub const ZERO: LogSigned = LogSigned { log_abs: f64::NEG_INFINITY, sign: 0 };
    pub const ONE: LogSigned = LogSigned { log_abs: 0.0, sign: 1 };

    pub fn new(log_abs: f64, sign: i8) -> Self {
        debug_assert!(sign == -1 || sign == 0 || sign == 1);
        if sign == 0 {
            LogSigned::ZERO
        } else {
            LogSigned { log_abs, sign }
        }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            LogSigned::ZERO
        } else {
            LogSigned { log_abs: v.abs().ln(), sign: if v > 0.0 { 1 } else { -1 } }
        }
    }

    pub fn value(self) -> f64 {
        match self.sign {
            0 => 0.0,
            s => f64::from(s) * self.log_abs.exp(),
        }
    }

    pub fn is_zero(self) -> bool {
        self.sign == 0
    }

    pub fn mul(self, other: LogSigned) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return LogSigned::ZERO;
        }
        LogSigned { log_abs: self.log_abs + other.log_abs, sign: self.sign * other.sign }
    }

    pub fn div(self, other: LogSigned) -> Self {
        debug_assert!(other.sign != 0, "division by exact zero");
        if self.sign == 0 {
            return LogSigned::ZERO;
        }
        LogSigned { log_abs: self.log_abs - other.log_abs, sign: self.sign * other.sign }
    }

    pub fn recip(self) -> Self {
        LogSigned::ONE.div(self)
    }

    /// Integer power (sign-exact for negative bases).
    pub fn powi(self, n: i32) -> Self {
        if self.sign == 0 {
            return if n == 0 { LogSigned::ONE } else { LogSigned::ZERO };
        }
        let sign = if n % 2 == 0 { 1 } else { self.sign };
        LogSigned { log_abs: self.log_abs * f64::from(n), sign }
    }

    /// Real power; requires a positive base.
    pub fn powf(self, p: f64) -> Self {
        debug_assert!(self.sign > 0, "real power of a non-positive LogSigned");
        LogSigned { log_abs: self.log_abs * p, sign: 1 }
    }

    /// Multiply by a plain scalar.
    pub fn scale(self, v: f64) -> Self {
        self.mul(LogSigned::from_value(v))
    }
}
