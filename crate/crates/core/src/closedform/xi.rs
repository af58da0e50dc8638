//! Coefficient tables for the degree-5 factors of the deleted-edge
//! characteristic polynomials. Row `d` lists the coefficient of `x^d` as a
//! sum of terms `c * m^i * n^j`, stored `(c, i, j)`.

pub(super) type Term = (i64, u32, u32);

#[rustfmt::skip]
pub(super) const ONE_IN_FIRST_SIDE: [&[Term]; 6] = [
    &[
        (-921, 0, 0), (873, 0, 1), (2387, 1, 0), (-408, 0, 2), (-2250, 1, 1), (-2322, 2, 0),
        (84, 0, 3), (1274, 1, 2), (1994, 2, 1), (1012, 3, 0), (-368, 1, 3), (-680, 2, 2),
        (-732, 3, 1), (-168, 4, 0), (24, 1, 4), (40, 2, 3), (-160, 3, 2), (72, 4, 1),
        (32, 2, 4), (160, 3, 3), (160, 4, 2), (16, 5, 1), (-32, 3, 4), (-32, 4, 3), (-32, 5, 2),
    ],
    &[
        (83, 0, 0), (-228, 0, 1), (76, 1, 0), (-40, 0, 2), (-90, 1, 1), (-366, 2, 0),
        (40, 0, 3), (246, 1, 2), (238, 2, 1), (248, 3, 0), (-28, 1, 3), (132, 2, 2),
        (20, 3, 1), (-40, 4, 0), (-16, 1, 4), (-160, 2, 3), (-184, 3, 2), (-88, 4, 1),
        (32, 2, 4), (48, 3, 3), (48, 4, 2), (16, 5, 1),
    ],
    &[
        (286, 0, 0), (-206, 0, 1), (-234, 1, 0), (8, 0, 2), (62, 1, 1), (-46, 2, 0),
        (4, 0, 3), (-10, 1, 2), (-10, 2, 1), (36, 3, 0), (40, 1, 3), (64, 2, 2),
        (52, 3, 1), (-8, 1, 4), (-24, 2, 3), (-24, 3, 2), (-16, 4, 1),
    ],
    &[
        (46, 0, 0), (4, 0, 1), (4, 1, 0), (-8, 0, 2), (-22, 1, 1), (-18, 2, 0),
        (-6, 1, 2), (2, 2, 1), (4, 1, 3), (4, 2, 2), (4, 3, 1),
    ],
    &[(-5, 0, 0), (5, 0, 1), (7, 1, 0), (-4, 1, 1)],
    &[(-1, 0, 0)],
];

#[rustfmt::skip]
pub(super) const TWO_IN_FIRST_SIDE: [&[Term]; 6] = [
    &[
        (-921, 0, 0), (2387, 0, 1), (873, 1, 0), (-2322, 0, 2), (-2250, 1, 1), (-408, 2, 0),
        (1012, 0, 3), (1994, 1, 2), (1274, 2, 1), (84, 3, 0), (-168, 0, 4), (-732, 1, 3),
        (-680, 2, 2), (-368, 3, 1), (72, 1, 4), (-160, 2, 3), (40, 3, 2), (24, 4, 1),
        (16, 1, 5), (160, 2, 4), (160, 3, 3), (32, 4, 2), (-32, 2, 5), (-32, 3, 4), (-32, 4, 3),
    ],
    &[
        (83, 0, 0), (76, 0, 1), (-228, 1, 0), (-366, 0, 2), (-90, 1, 1), (-40, 2, 0),
        (248, 0, 3), (238, 1, 2), (246, 2, 1), (40, 3, 0), (-40, 0, 4), (20, 1, 3),
        (132, 2, 2), (-28, 3, 1), (-88, 1, 4), (-184, 2, 3), (-160, 3, 2), (-16, 4, 1),
        (16, 1, 5), (48, 2, 4), (48, 3, 3), (32, 4, 2),
    ],
    &[
        (286, 0, 0), (-234, 0, 1), (-206, 1, 0), (-46, 0, 2), (62, 1, 1), (8, 2, 0),
        (36, 0, 3), (-10, 1, 2), (-10, 2, 1), (4, 3, 0), (52, 1, 3), (64, 2, 2),
        (40, 3, 1), (-16, 1, 4), (-24, 2, 3), (-24, 3, 2), (-8, 4, 1),
    ],
    &[
        (46, 0, 0), (4, 0, 1), (4, 1, 0), (-18, 0, 2), (-22, 1, 1), (-8, 2, 0),
        (2, 1, 2), (-6, 2, 1), (4, 1, 3), (4, 2, 2), (4, 3, 1),
    ],
    &[(-5, 0, 0), (7, 0, 1), (5, 1, 0), (-4, 1, 1)],
    &[(-1, 0, 0)],
];
