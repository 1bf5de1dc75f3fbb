pub mod cli;
pub mod exactnum;
pub mod galois;
pub mod oracle;
pub mod quotient;
pub mod report;
pub mod sample;
pub mod seqrep;
pub mod series;
pub mod sets;
