use vfpoly::enumerate::EnumerateError;
use vfpoly::fp::FpError;
use vfpoly::perm::PermError;
use vfpoly::verify::VerifyError;
use vfpoly::PolyError;

pub const INVALID: u8 = 1;
pub const USAGE: u8 = 2;
pub const RESOURCE: u8 = 3;

/// An error message together with the process exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: USAGE, message: message.into() }
    }

    /// Unreadable input file.
    pub fn input(err: std::io::Error) -> Self {
        Failure { code: USAGE, message: err.to_string() }
    }

    pub fn io(err: std::io::Error) -> Self {
        Failure { code: INVALID, message: err.to_string() }
    }

    fn coded(code: u8, err: impl std::fmt::Display) -> Self {
        Failure { code, message: err.to_string() }
    }
}

fn perm_code(err: &PermError) -> u8 {
    match err {
        PermError::Parse { .. } | PermError::NotABijection { .. } | PermError::DegreeMismatch { .. } => USAGE,
        _ => INVALID,
    }
}

fn fp_code(err: &FpError) -> u8 {
    match err {
        FpError::Syntax { .. } => USAGE,
        FpError::CosetLimitExceeded { .. } => RESOURCE,
        FpError::Perm(e) => perm_code(e),
    }
}

fn poly_code(err: &PolyError) -> u8 {
    match err {
        PolyError::Fp(e) => fp_code(e),
        PolyError::Perm(e) => perm_code(e),
        PolyError::NotPolyhedral(inner) => poly_code(inner),
        _ => INVALID,
    }
}

fn enumerate_code(err: &EnumerateError) -> u8 {
    match err {
        EnumerateError::VertexCountOutOfRange { .. }
        | EnumerateError::ParameterOutOfRange(_)
        | EnumerateError::Census { .. } => USAGE,
        EnumerateError::ThreadPool(_) => INVALID,
        EnumerateError::Poly(e) => poly_code(e),
    }
}

impl From<PermError> for Failure {
    fn from(err: PermError) -> Self {
        Failure::coded(perm_code(&err), err)
    }
}

impl From<FpError> for Failure {
    fn from(err: FpError) -> Self {
        Failure::coded(fp_code(&err), err)
    }
}

impl From<PolyError> for Failure {
    fn from(err: PolyError) -> Self {
        Failure::coded(poly_code(&err), err)
    }
}

impl From<EnumerateError> for Failure {
    fn from(err: EnumerateError) -> Self {
        Failure::coded(enumerate_code(&err), err)
    }
}

impl From<VerifyError> for Failure {
    fn from(err: VerifyError) -> Self {
        let code = match &err {
            VerifyError::UnknownSuite(_) => USAGE,
            VerifyError::Enumerate(e) => enumerate_code(e),
            VerifyError::Fp(e) => fp_code(e),
        };
        Failure::coded(code, err)
    }
}
