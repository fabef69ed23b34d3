mod ckp;
mod connector_quotient;
mod cube;
mod grpd;
mod hm;
mod pushout;

pub use ckp::Ckp;
pub use connector_quotient::ConnectorQuotient;
pub use cube::CubeCheck;
pub use grpd::GrpdClosure;
pub use hm::HmModularity;
pub use pushout::GoursatPushout;
