//! Inputs shared by the benchmarks.

use jmarked::scheme::{build_generic_set, parse_naming_map, GenericMarkedSet};
use jmarked::{parse_input, MarkedSet, Rational};

const NOGBASIS: &str = include_str!("../../../data/nogbasis.txt");
const THREE_SQUARES: &str = include_str!("../../../data/three_squares.txt");
const APPENDIX: &str = include_str!("../../../data/appendix.txt");
const APPENDIX_NAMING: &str = include_str!("../../../data/appendix.naming");

/// The eight-generator marked basis that is not a Groebner basis.
pub fn nogbasis() -> MarkedSet<Rational> {
    parse_input(NOGBASIS).unwrap().marked_set().unwrap()
}

/// The generic marked set over `(x^2, xy, y^2)`.
pub fn three_squares() -> GenericMarkedSet {
    let j = parse_input(THREE_SQUARES).unwrap().ideal.unwrap();
    build_generic_set(&j, None).unwrap()
}

/// The generic marked set over the eight-generator ideal with its naming map.
pub fn appendix() -> GenericMarkedSet {
    let j = parse_input(APPENDIX).unwrap().ideal.unwrap();
    let map = parse_naming_map(j.ring(), APPENDIX_NAMING).unwrap();
    build_generic_set(&j, Some(&map)).unwrap()
}
