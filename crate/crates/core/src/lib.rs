pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod crossed;
pub mod graded;
pub mod groupoid;
pub mod report;
pub mod scalar;
pub mod separability;
