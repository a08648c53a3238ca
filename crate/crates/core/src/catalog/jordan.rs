use serde::{Deserialize, Serialize};

use super::PunctureClass;

/// Counts of a Jordan-type puncture list. Since `J-` is conjugate to `-J+`
/// and `-Id` is central, only `r`, and the sign `sigma` the minus signs
/// multiply to, matter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PunctureReduction {
    pub r_plus: u32,
    pub r_minus: u32,
    pub t: u32,
    pub r: u32,
    pub sigma: i8,
    pub twisted: bool,
}

pub fn jordan_reduce(punctures: &[PunctureClass]) -> PunctureReduction {
    let count = |c| punctures.iter().filter(|&&p| p == c).count() as u32;
    let r_plus = count(PunctureClass::JPlus);
    let r_minus = count(PunctureClass::JMinus);
    let t = count(PunctureClass::MinusId);
    let sigma = if (r_minus + t) % 2 == 0 { 1 } else { -1 };
    PunctureReduction {
        r_plus,
        r_minus,
        t,
        r: r_plus + r_minus,
        sigma,
        twisted: sigma == -1,
    }
}
