//! Tabulated codes, embedded matrices, verification reports and file I/O.

pub mod matrices;
pub mod qam;
pub mod report;
pub mod table1;
pub mod table2;

pub use matrices::{embedded_matrix, embedded_matrix_by_name, EmbeddedName};
pub use qam::{format_qam, parse_qam, read_qam, write_qam};
pub use report::{analyze, verify_example2, ExampleOutcome, VerificationReport};
pub use table1::{build_family, verify_family, FamilyCheck, FamilyParams};
pub use table2::{build_ct, ct_row, ct_rows, ChainBuilder, CtBuild, CtRow, Recipe};
