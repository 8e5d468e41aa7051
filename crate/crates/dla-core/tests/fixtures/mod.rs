//! Frozen ground truth for the acceptance suite: the published orbit
//! table of two-site subalgebras and the explicit three-site bases.
#![allow(clippy::type_complexity)]

/// Rows of the orbit table: (family, dim, stabilizer order, orbit size,
/// (s, p, e, d)).
pub const ORBIT_TABLE: [(&str, usize, usize, usize, (usize, usize, usize, usize)); 36] = [
    ("a0", 1, 4, 3, (0, 0, 1, 0)),
    ("a1", 1, 2, 6, (0, 0, 0, 1)),
    ("a2", 2, 4, 3, (0, 0, 0, 2)),
    ("a3", 2, 2, 6, (0, 0, 1, 1)),
    ("a4", 2, 4, 3, (0, 0, 2, 0)),
    ("a5", 2, 2, 6, (0, 0, 0, 2)),
    ("a6", 3, 4, 3, (0, 0, 1, 2)),
    ("a7", 3, 12, 1, (0, 0, 3, 0)),
    ("a8", 3, 1, 12, (1, 0, 1, 1)),
    ("a9", 3, 2, 6, (1, 0, 0, 2)),
    ("a10", 3, 6, 2, (0, 0, 0, 3)),
    ("a11", 4, 1, 12, (1, 0, 0, 3)),
    ("a12", 4, 1, 12, (1, 0, 1, 2)),
    ("a13", 4, 1, 12, (1, 0, 2, 1)),
    ("a14", 6, 4, 3, (2, 1, 2, 2)),
    ("a15", 6, 2, 6, (3, 0, 1, 2)),
    ("a16", 6, 4, 3, (2, 1, 0, 4)),
    ("a17", 6, 2, 6, (2, 0, 1, 3)),
    ("a18", 6, 2, 6, (2, 0, 2, 2)),
    ("a19", 7, 2, 6, (2, 0, 1, 4)),
    ("a20", 7, 4, 3, (2, 1, 3, 2)),
    ("a21", 10, 2, 6, (4, 1, 2, 4)),
    ("a22", 15, 12, 1, (6, 3, 3, 6)),
    ("b0", 2, 4, 3, (2, 1, 0, 0)),
    ("b1", 3, 4, 3, (2, 1, 1, 0)),
    ("b2", 4, 2, 6, (2, 1, 0, 2)),
    ("b3", 6, 12, 1, (6, 3, 0, 0)),
    ("b4", 7, 2, 6, (4, 1, 1, 2)),
    ("c0", 1, 2, 6, (1, 0, 0, 0)),
    ("c1", 2, 1, 12, (1, 0, 0, 1)),
    ("c2", 2, 2, 6, (1, 0, 1, 0)),
    ("c3", 2, 2, 6, (2, 0, 0, 0)),
    ("c4", 3, 2, 6, (2, 0, 0, 1)),
    ("c5", 3, 6, 2, (3, 0, 0, 0)),
    ("c6", 4, 1, 12, (2, 0, 1, 1)),
    ("c7", 4, 2, 6, (4, 1, 0, 0)),
];

/// Explicit bases of the open three-site chain algebras.
pub const OPEN_3: [(&str, &[&str]); 19] = [
    ("a0", &["IXX", "XXI"]),
    ("a1", &["IXY", "XYI", "XZY"]),
    ("a2", &["IXY", "IYX", "XYI", "XZY", "YXI", "YZX"]),
    (
        "a3",
        &[
            "IXX", "IYZ", "XXI", "XZZ", "YIY", "YXZ", "YYX", "YZI", "ZIZ", "ZXY",
        ],
    ),
    ("a4", &["IXX", "IYY", "XXI", "XZY", "YYI", "YZX"]),
    (
        "a5",
        &[
            "IXY", "IYZ", "XYI", "XZY", "YIX", "YXZ", "YYY", "YZI", "ZIY", "ZYX",
        ],
    ),
    (
        "a6",
        &[
            "IXY", "IYX", "IZZ", "XIX", "XXZ", "XYI", "XZY", "YIY", "YXI", "YYZ", "YZX", "ZIZ",
            "ZXX", "ZYY", "ZZI",
        ],
    ),
    (
        "a7",
        &[
            "IXX", "IYY", "IZZ", "XIX", "XXI", "XYZ", "XZY", "YIY", "YXZ", "YYI", "YZX", "ZIZ",
            "ZXY", "ZYX", "ZZI",
        ],
    ),
    (
        "a8",
        &[
            "IIY", "IXX", "IXZ", "IYI", "IZX", "IZZ", "XXI", "XYX", "XYZ", "XZI",
        ],
    ),
    (
        "a9",
        &[
            "IIX", "IXI", "IXY", "IXZ", "XYI", "XYY", "XYZ", "XZI", "XZY", "XZZ",
        ],
    ),
    (
        "a10",
        &[
            "IXY", "IYZ", "IZX", "XIZ", "XXX", "XYI", "XZY", "YIX", "YXZ", "YYY", "YZI", "ZIY",
            "ZXI", "ZYX", "ZZZ",
        ],
    ),
    (
        "a11",
        &[
            "IIX", "IXI", "IXY", "IXZ", "IYX", "IZX", "XIY", "XIZ", "XXX", "XYI", "XYY", "XYZ",
            "XZI", "XZY", "XZZ", "YXI", "YYX", "YZX", "ZIX", "ZXY", "ZXZ",
        ],
    ),
    (
        "a12",
        &[
            "IIX", "IIY", "IIZ", "IXX", "IXY", "IXZ", "IYX", "IYY", "IYZ", "IZI", "XII", "XXI",
            "XYI", "XZX", "XZY", "XZZ", "YIX", "YIY", "YIZ", "YXX", "YXY", "YXZ", "YYX", "YYY",
            "YYZ", "YZI", "ZIX", "ZIY", "ZIZ", "ZXX", "ZXY", "ZXZ", "ZYX", "ZYY", "ZYZ", "ZZI",
        ],
    ),
    (
        "a13",
        &[
            "IIX", "IXI", "IXX", "IYY", "IYZ", "IZY", "IZZ", "XII", "XIX", "XXI", "XYY", "XYZ",
            "XZY", "XZZ", "YIY", "YIZ", "YXY", "YXZ", "YYI", "YYX", "YZI", "YZX", "ZIY", "ZIZ",
            "ZXY", "ZXZ", "ZYI", "ZYX", "ZZI", "ZZX",
        ],
    ),
    (
        "a14",
        &[
            "IIZ", "IXX", "IXY", "IYX", "IYY", "IZI", "XXI", "XYI", "XZX", "XZY", "YXI", "YYI",
            "YZX", "YZY", "ZII",
        ],
    ),
    (
        "a15",
        &[
            "IIX", "IIY", "IIZ", "IXI", "IXX", "IXY", "IXZ", "IYI", "IYX", "IYY", "IYZ", "IZI",
            "IZX", "IZY", "IZZ", "XIX", "XIY", "XIZ", "XXI", "XXX", "XXY", "XXZ", "XYI", "XYX",
            "XYY", "XYZ", "XZI", "XZX", "XZY", "XZZ",
        ],
    ),
    (
        "a16",
        &[
            "IIX", "IXI", "IXY", "IXZ", "IYX", "IZX", "XII", "XIY", "XIZ", "XXX", "XYI", "XYY",
            "XYZ", "XZI", "XZY", "XZZ", "YIX", "YXI", "YXY", "YXZ", "YYX", "YZX", "ZIX", "ZXI",
            "ZXY", "ZXZ", "ZYX", "ZZX",
        ],
    ),
    (
        "a17",
        &[
            "IIZ", "IXI", "IXX", "IXY", "IYI", "IYX", "IYY", "IZI", "IZX", "IZY", "XIZ", "XXI",
            "XXX", "XXY", "XYI", "XYX", "XYY", "XZI", "XZX", "XZY", "YII", "YIX", "YIY", "YXZ",
            "YYZ", "YZZ", "ZIZ", "ZXI", "ZXX", "ZXY", "ZYI", "ZYX", "ZYY", "ZZI", "ZZX", "ZZY",
        ],
    ),
    (
        "a20",
        &[
            "IIZ", "IXX", "IXY", "IYX", "IYY", "IZI", "IZZ", "XIX", "XIY", "XXI", "XXZ", "XYI",
            "XYZ", "XZX", "XZY", "YIX", "YIY", "YXI", "YXZ", "YYI", "YYZ", "YZX", "YZY", "ZII",
            "ZIZ", "ZXX", "ZXY", "ZYX", "ZYY", "ZZI",
        ],
    ),
];

/// Explicit bases of the periodic three-site chain algebras.
pub const PERIODIC_3: [(&str, &[&str]); 10] = [
    ("a0", &["IXX", "XIX", "XXI"]),
    ("a1", &["IXY", "XYI", "XZY", "YIX", "YXZ", "ZYX"]),
    (
        "a2",
        &[
            "IXY", "IYX", "XIY", "XYI", "XYZ", "XZY", "YIX", "YXI", "YXZ", "YZX", "ZXY", "ZYX",
        ],
    ),
    (
        "a3",
        &[
            "IIX", "IXI", "IXX", "IYY", "IYZ", "IZY", "IZZ", "XII", "XIX", "XXI", "XYY", "XYZ",
            "XZY", "XZZ", "YIY", "YIZ", "YXY", "YXZ", "YYI", "YYX", "YZI", "YZX", "ZIY", "ZIZ",
            "ZXY", "ZXZ", "ZYI", "ZYX", "ZZI", "ZZX",
        ],
    ),
    (
        "a4",
        &[
            "IXX", "IYY", "IZZ", "XIX", "XXI", "XYZ", "XZY", "YIY", "YXZ", "YYI", "YZX", "ZIZ",
            "ZXY", "ZYX", "ZZI",
        ],
    ),
    (
        "a6",
        &[
            "IIZ", "IXX", "IXY", "IYX", "IYY", "IZI", "IZZ", "XIX", "XIY", "XXI", "XXZ", "XYI",
            "XYZ", "XZX", "XZY", "YIX", "YIY", "YXI", "YXZ", "YYI", "YYZ", "YZX", "YZY", "ZII",
            "ZIZ", "ZXX", "ZXY", "ZYX", "ZYY", "ZZI",
        ],
    ),
    (
        "a8",
        &[
            "IIY", "IXX", "IXZ", "IYI", "IYY", "IZX", "IZZ", "XIX", "XIZ", "XXI", "XXY", "XYX",
            "XYZ", "XZI", "XZY", "YII", "YIY", "YXX", "YXZ", "YYI", "YZX", "YZZ", "ZIX", "ZIZ",
            "ZXI", "ZXY", "ZYX", "ZYZ", "ZZI", "ZZY",
        ],
    ),
    (
        "a9",
        &[
            "IIX", "IXI", "IXY", "IXZ", "XII", "XYI", "XYY", "XYZ", "XZI", "XZY", "XZZ", "YIX",
            "YXY", "YXZ", "YYX", "YZX", "ZIX", "ZXY", "ZXZ", "ZYX", "ZZX",
        ],
    ),
    (
        "a11",
        &[
            "IIX", "IXI", "IXY", "IXZ", "IYX", "IZX", "XII", "XIY", "XIZ", "XXX", "XYI", "XYY",
            "XYZ", "XZI", "XZY", "XZZ", "YIX", "YXI", "YXY", "YXZ", "YYX", "YZX", "ZIX", "ZXI",
            "ZXY", "ZXZ", "ZYX", "ZZX",
        ],
    ),
    (
        "a14",
        &[
            "IIZ", "IXX", "IXY", "IYX", "IYY", "IZI", "IZZ", "XIX", "XIY", "XXI", "XXZ", "XYI",
            "XYZ", "XZX", "XZY", "YIX", "YIY", "YXI", "YXZ", "YYI", "YYZ", "YZX", "YZY", "ZII",
            "ZIZ", "ZXX", "ZXY", "ZYX", "ZYY", "ZZI",
        ],
    ),
];

/// Families whose periodic three-site algebra equals the open one.
pub const PERIODIC_3_EQUALS_OPEN: [&str; 6] = ["a5", "a7", "a10", "a13", "a16", "a20"];

/// Families whose open three-site algebra is already all of su(8).
pub const OPEN_3_FULL: [&str; 4] = ["a18", "a19", "a21", "a22"];

/// Families whose periodic three-site algebra is all of su(8).
pub const PERIODIC_3_FULL: [&str; 3] = ["a12", "a15", "a17"];
