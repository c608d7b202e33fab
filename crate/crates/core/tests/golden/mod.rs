//! Canonical basis matrices transcribed verbatim from published tables.
//! Rows and columns are listed in the order they were printed; `.` is 0.

#![allow(dead_code)]

pub struct Table {
    pub cols: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [&'static str])],
}

/// Core (2,2,1,1), m = 3, weight 3.
pub const CORE_2211_M3_W3: Table = Table {
    cols: &[
        "2^2,1^11",
        "2^5,1^5",
        "3^3,2^2,1^2",
        "4,3,1^8",
        "4,3,2^3,1^2",
        "4,3^2,2,1^3",
        "4,3^2,2^2,1",
        "5,3^2,1^4",
        "5,3^2,2^2",
        "5^2,3,2",
    ],
    rows: &[
        ("2^2,1^11", &["1", ".", ".", ".", ".", ".", ".", ".", ".", "."]),
        ("2^5,1^5", &[".", "1", ".", ".", ".", ".", ".", ".", ".", "."]),
        ("3^3,2^2,1^2", &[".", ".", "1", ".", ".", ".", ".", ".", ".", "."]),
        ("4,3,1^8", &["q^2", "q^2", ".", "1", ".", ".", ".", ".", ".", "."]),
        ("4,3,2^3,1^2", &[".", "q^2", "q^2", ".", "1", ".", ".", ".", ".", "."]),
        ("4,3^2,2,1^3", &[".", "q^4", "q^4", "q^2", "q^2", "1", ".", ".", ".", "."]),
        ("4,3^2,2^2,1", &[".", ".", "q^6", ".", "q^4", "q^2", "1", ".", ".", "."]),
        ("5,2,1^8", &[".", ".", ".", "q^2", ".", ".", ".", ".", ".", "."]),
        ("5,2^4,1^2", &[".", ".", ".", ".", "q^2", ".", ".", ".", ".", "."]),
        ("5,3^2,1^4", &["q^2", "q^2", ".", "q^4", "q^4", "q^2", ".", "1", ".", "."]),
        ("5,3^2,2^2", &[".", "q^4", ".", ".", "q^6", "q^4", "q^2", "q^2", "1", "."]),
        ("5^2,1^5", &["q^4", "q^4", ".", ".", ".", ".", ".", "q^2", ".", "."]),
        ("5^2,3,2", &["q^2", "q^6", ".", "q^4", ".", "q^2", ".", "q^4", "q^2", "1"]),
        ("5^2,4,1", &["q^4", ".", ".", "q^6", ".", "q^4", ".", ".", ".", "q^2"]),
        ("7,3,1^5", &[".", ".", ".", ".", ".", "q^2", ".", "q^4", ".", "."]),
        ("7,3^2,2", &["q^4", ".", ".", ".", ".", "q^4", "q^2", "q^6", "q^4", "q^2"]),
        ("7,6,1^2", &["q^6", ".", ".", ".", ".", ".", ".", ".", ".", "q^4"]),
        ("8,2,1^5", &[".", ".", ".", ".", ".", "q^4", ".", ".", ".", "."]),
        ("8,3^2,1", &[".", ".", ".", ".", ".", "q^6", "q^4", ".", "q^2", "q^4"]),
        ("8,5,1^2", &[".", ".", ".", ".", ".", ".", ".", ".", "q^4", "q^6"]),
        ("10,3,1^2", &[".", ".", ".", ".", ".", ".", "q^4", ".", "q^6", "."]),
        ("11,2,1^2", &[".", ".", ".", ".", ".", ".", "q^6", ".", ".", "."]),
    ],
};

/// Bar-core (12,11,7,6,2,1), h = 5, weight 3.
pub const BAR_CORE_12_11_7_6_2_1_H5_W3: Table = Table {
    cols: &[
        "12,11,7,6,5^3,2,1",
        "12,11,10,7,6,5,2,1",
        "15,12,11,7,6,2,1",
        "16,12,7,6,5^2,2,1",
        "16,12,10,7,6,2,1",
        "16,12,11,7,5,2,1",
        "16,12,11,7,6,2",
        "17,12,11,6,5,2,1",
        "17,12,11,7,6,1",
        "17,16,11,7,2,1",
    ],
    rows: &[
        ("12,11,7,6,5^3,2,1", &["1", ".", ".", ".", ".", ".", ".", ".", ".", "."]),
        ("12,11,10,7,6,5,2,1", &["-q^4+q^2", "1", ".", ".", ".", ".", ".", ".", ".", "."]),
        ("15,12,11,7,6,2,1", &["q^4", "q^2", "1", ".", ".", ".", ".", ".", ".", "."]),
        ("16,12,7,6,5^2,2,1", &["q^2", "q^2", ".", "1", ".", ".", ".", ".", ".", "."]),
        ("16,12,10,7,6,2,1", &["q^4", "q^4+q^2", "q^2", "q^2", "1", ".", ".", ".", ".", "."]),
        ("16,12,11,7,5,2,1", &[".", "q^4", "q^4", "q^2", "q^2", "1", ".", ".", ".", "."]),
        ("16,12,11,7,6,2", &[".", ".", "q^6", ".", "q^4", "q^2", "1", ".", ".", "."]),
        ("17,11,7,6,5^2,2,1", &[".", ".", ".", "q^2", ".", ".", ".", ".", ".", "."]),
        ("17,11,10,7,6,2,1", &[".", ".", ".", "q^4", "q^2", ".", ".", ".", ".", "."]),
        ("17,12,11,6,5,2,1", &["q^2", "q^2", ".", "q^4", "q^4", "q^2", ".", "1", ".", "."]),
        ("17,12,11,7,6,1", &[".", "q^4", ".", ".", "q^6", "q^4", "q^2", "q^2", "1", "."]),
        ("17,16,7,6,5,2,1", &["q^4", "q^4", ".", ".", ".", ".", ".", "q^2", ".", "."]),
        ("17,16,11,7,2,1", &["q^2", "q^6", ".", "q^4", ".", "q^2", ".", "q^4", "q^2", "1"]),
        ("17,16,12,6,2,1", &["q^4", ".", ".", "q^6", ".", "q^4", ".", ".", ".", "q^2"]),
        ("21,12,7,6,5,2,1", &[".", ".", ".", ".", ".", "q^2", ".", "q^4", ".", "."]),
        ("21,12,11,7,2,1", &["q^4", ".", ".", ".", ".", "q^4", "q^2", "q^6", "q^4", "q^2"]),
        ("21,17,7,6,2,1", &["q^6", ".", ".", ".", ".", ".", ".", ".", ".", "q^4"]),
        ("22,11,7,6,5,2,1", &[".", ".", ".", ".", ".", "q^4", ".", ".", ".", "."]),
        ("22,12,11,6,2,1", &[".", ".", ".", ".", ".", "q^6", "q^4", ".", "q^2", "q^4"]),
        ("22,16,7,6,2,1", &[".", ".", ".", ".", ".", ".", ".", ".", "q^4", "q^6"]),
        ("26,12,7,6,2,1", &[".", ".", ".", ".", ".", ".", "q^4", ".", "q^6", "."]),
        ("27,11,7,6,2,1", &[".", ".", ".", ".", ".", ".", "q^6", ".", ".", "."]),
    ],
};

/// Bar-core (10,7,4,1), h = 3, weight 4.
pub const BAR_CORE_10_7_4_1_H3_W4: Table = Table {
    cols: &["10,7,4,3^4,1", "10,7,6,4,3^2,1", "10,7,6^2,4,1", "10,9,7,4,3,1", "12,10,7,4,1"],
    rows: &[
        ("10,7,4,3^4,1", &["1", ".", ".", ".", "."]),
        ("10,7,6,4,3^2,1", &["q^6-q^4+q^2", "1", ".", ".", "."]),
        ("10,7,6^2,4,1", &["-q^6", "q^2", "1", ".", "."]),
        ("10,9,7,4,3,1", &["-q^6+q^4", "q^2", "q^2", "1", "."]),
        ("12,10,7,4,1", &["q^6", "q^4", ".", "q^2", "1"]),
        ("13,7,4,3^3,1", &["q^2", "q^2", ".", ".", "."]),
        ("13,7,6,4,3,1", &["-q^6+q^4", "-q^6+q^4+q^2", "q^2", "q^2", "."]),
        ("13,9,7,4,1", &["q^6", "q^6+q^4", "q^4", "q^4+q^2", "q^2"]),
        ("13,10,4,3^2,1", &[".", "q^4", ".", "q^4", "."]),
        ("13,10,6,4,1", &[".", "q^6", "q^4", "q^6+q^4", "q^4"]),
        ("16,7,4,3^2,1", &["q^4", "q^4", "q^4", ".", "."]),
        ("16,7,6,4,1", &["q^6", "q^6+q^4", "q^6", "q^4", "."]),
        ("13,10,7,3,1", &[".", ".", ".", "q^6", "q^6"]),
        ("16,10,4,3,1", &[".", "q^6", "q^6", "q^6", "."]),
        ("19,7,4,3,1", &["q^6", "q^6", ".", ".", "."]),
        ("13,10,7,4", &[".", ".", ".", ".", "q^8"]),
        ("16,10,7,1", &[".", ".", ".", "q^8", "."]),
        ("16,13,4,1", &[".", ".", "q^8", ".", "."]),
        ("19,10,4,1", &[".", "q^8", ".", ".", "."]),
        ("22,7,4,1", &["q^8", ".", ".", ".", "."]),
    ],
};
