pub mod polyalg;
pub mod grobner;
pub mod detvar;
pub mod topo;
pub mod indexcalc;
pub mod cli;
