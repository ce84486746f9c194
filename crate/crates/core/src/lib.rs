pub mod assumptions;
pub mod cli;
pub mod fgh;
pub mod grid;
pub mod numerics;
pub mod params;
pub mod profile;
pub mod shooting;
pub mod spectrum;
pub mod pohozaev;
pub mod stability;
