mod op;
mod spectral;
mod string;
mod zeta;

pub use op::op;
pub use spectral::spectral;
pub use string::string;
pub use zeta::{zeros, zeta};
