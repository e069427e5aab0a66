pub mod exactalg;
pub mod kovacic;
pub mod schrodinger;
pub mod statmech;
pub mod susyqm;
pub mod cli;
