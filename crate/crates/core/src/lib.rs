pub mod catalog;
pub mod motive;
pub mod oracle;
pub mod ring;
