#![allow(clippy::needless_range_loop)]

pub mod coords;
pub mod curvedkoszul;
pub mod frobdem;
pub mod haiman;
pub mod homseries;
pub mod ideals;
pub mod polycore;
pub mod report;
pub mod symfun;
pub mod verify;
