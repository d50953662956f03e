//! Report documents, verification runs and text rendering behind the
//! `lefschetz` binary.

pub mod document;
pub mod render;
pub mod suites;

use document::Summary;

/// 0 when every asserted relation held, 1 when one failed, 3 when random
/// draws kept disagreeing.
pub fn verify_exit_code(summary: &Summary) -> u8 {
    if summary.failed > 0 {
        1
    } else if summary.genericity_failures > 0 {
        3
    } else {
        0
    }
}
