//! Reference tables for the Hopf algebra and its graded dimensions.

/// `(h, S h)` for every generator of degree at most 5.
pub const ANTIPODES: &[(&str, &str)] = &[
    ("b[x1]", "-b[x1]"),
    ("b[x0]", "-b[x0] + b[x1]*a[e]"),
    ("b[x1x1]", "-b[x1x1] + 3*b[x1]^2"),
    (
        "b[x0x1]",
        "-b[x0x1] + b[x1x1]*a[e] - 3*b[x1]^2*a[e] + 2*b[x0]*b[x1] + b[x1]*a[x1]",
    ),
    (
        "b[x1x0]",
        "-b[x1x0] + b[x1x1]*a[e] + 3*b[x0]*b[x1] - 3*b[x1]^2*a[e]",
    ),
    ("b[x1x1x1]", "-b[x1x1x1] + 10*b[x1]*b[x1x1] - 15*b[x1]^3"),
    (
        "b[x0x0]",
        "-b[x0x0] + b[x0x1]*a[e] + b[x1x0]*a[e] - b[x1x1]*a[e]^2 + 3*b[x1]^2*a[e]^2 + 2*b[x0]^2 \
         - 5*b[x0]*b[x1]*a[e] - b[x1]*a[e]*a[x1] + b[x1]*a[x0]",
    ),
    ("a[e]", "-a[e]"),
    ("a[x1]", "-a[x1] + b[x1]*a[e]"),
    ("a[x0]", "-a[x0] + b[x0]*a[e] - b[x1]*a[e]^2 + a[e]*a[x1]"),
    (
        "a[x1x1]",
        "-a[x1x1] + b[x1x1]*a[e] - 3*b[x1]^2*a[e] + 3*b[x1]*a[x1]",
    ),
    (
        "a[x0x1]",
        "-a[x0x1] + b[x0x1]*a[e] - 2*b[x0]*b[x1]*a[e] - 4*b[x1]*a[e]*a[x1] + 3*b[x1]^2*a[e]^2 \
         - b[x1x1]*a[e]^2 + a[x1]^2 + a[e]*a[x1x1] + b[x0]*a[x1] + b[x1]*a[x0]",
    ),
    (
        "a[x1x0]",
        "-a[x1x0] + b[x1x0]*a[e] + a[e]*a[x1x1] - 3*b[x0]*b[x1]*a[e] - 3*b[x1]*a[e]*a[x1] \
         - b[x1x1]*a[e]^2 + 3*b[x1]^2*a[e]^2 + 2*b[x0]*a[x1] + b[x1]*a[x0]",
    ),
    (
        "a[x1x1x1]",
        "-a[x1x1x1] + b[x1x1x1]*a[e] - 10*b[x1]*b[x1x1]*a[e] + 15*b[x1]^3*a[e] \
         + 4*b[x1x1]*a[x1] - 15*b[x1]^2*a[x1] + 6*b[x1]*a[x1x1]",
    ),
    (
        "a[x0x0]",
        "-a[x0x0] + b[x0x0]*a[e] - 2*b[x0]^2*a[e] + a[e]*a[x0x1] + a[e]*a[x1x0] \
         - 3*b[x1]*a[x0]*a[e] - 3*b[x0]*a[x1]*a[e] - a[e]*a[x1]^2 - b[x0x1]*a[e]^2 \
         - b[x1x0]*a[e]^2 + 5*b[x0]*b[x1]*a[e]^2 - a[e]^2*a[x1x1] + 4*b[x1]*a[e]^2*a[x1] \
         + b[x1x1]*a[e]^3 - 3*b[x1]^2*a[e]^3 + 2*b[x0]*a[x0] + a[x0]*a[x1]",
    ),
];

/// `(h, Δ̃ h)` where `h` stands for either kind on both sides.
pub const TILDE_COPRODUCTS: &[(&str, &str)] = &[
    ("h[e]", "h[e] ⊗ 1"),
    ("h[x1]", "h[x1] ⊗ 1"),
    ("h[x0]", "h[x0] ⊗ 1 + h[x1] ⊗ a[e]"),
    ("h[x1x1]", "h[x1x1] ⊗ 1 + h[x1] ⊗ b[x1]"),
    ("h[x0x1]", "h[x0x1] ⊗ 1 + h[x1] ⊗ a[x1] + h[x1x1] ⊗ a[e]"),
    ("h[x1x0]", "h[x1x0] ⊗ 1 + h[x1] ⊗ b[x0] + h[x1x1] ⊗ a[e]"),
    (
        "h[x1x1x1]",
        "h[x1x1x1] ⊗ 1 + 3*h[x1x1] ⊗ b[x1] + h[x1] ⊗ b[x1x1]",
    ),
    (
        "h[x0x0]",
        "h[x0x0] ⊗ 1 + h[x1] ⊗ a[x0] + h[x0x1] ⊗ a[e] + h[x1x0] ⊗ a[e] + h[x1x1] ⊗ a[e]^2",
    ),
];

/// `(h, Δ' h)` for every generator of degree at most 5.
pub const REDUCED_COPRODUCTS: &[(&str, &str)] = &[
    ("b[x1]", "0"),
    ("b[x0]", "b[x1] ⊗ a[e]"),
    ("b[x1x1]", "3*b[x1] ⊗ b[x1]"),
    (
        "b[x0x1]",
        "b[x0] ⊗ b[x1] + b[x1] ⊗ b[x0] + b[x1] ⊗ a[x1] + b[x1] ⊗ b[x1]*a[e] + b[x1x1] ⊗ a[e]",
    ),
    (
        "b[x1x0]",
        "b[x0] ⊗ b[x1] + 2*b[x1] ⊗ b[x0] + b[x1] ⊗ b[x1]*a[e] + b[x1x1] ⊗ a[e]",
    ),
    (
        "b[x1x1x1]",
        "6*b[x1x1] ⊗ b[x1] + 4*b[x1] ⊗ b[x1x1] + 3*b[x1] ⊗ b[x1]^2",
    ),
    (
        "b[x0x0]",
        "2*b[x0] ⊗ b[x0] + b[x1] ⊗ a[x0] + 2*b[x1] ⊗ b[x0]*a[e] + b[x0x1] ⊗ a[e] \
         + b[x1x0] ⊗ a[e] + b[x1x1] ⊗ a[e]^2",
    ),
    ("a[e]", "0"),
    ("a[x1]", "b[x1] ⊗ a[e]"),
    ("a[x0]", "b[x0] ⊗ a[e] + a[x1] ⊗ a[e] + b[x1] ⊗ a[e]^2"),
    (
        "a[x1x1]",
        "a[x1] ⊗ b[x1] + 2*b[x1] ⊗ a[x1] + b[x1] ⊗ b[x1]*a[e] + b[x1x1] ⊗ a[e]",
    ),
    (
        "a[x0x1]",
        "b[x1] ⊗ a[x0] + b[x0] ⊗ a[x1] + a[x1] ⊗ a[x1] + b[x0x1] ⊗ a[e] + a[x1x1] ⊗ a[e] \
         + 2*b[x1] ⊗ a[x1]*a[e] + b[x1x1] ⊗ a[e]^2",
    ),
    (
        "a[x1x0]",
        "a[x1] ⊗ b[x0] + b[x1] ⊗ a[x0] + b[x0] ⊗ a[x1] + b[x1] ⊗ b[x0]*a[e] + b[x1x0] ⊗ a[e] \
         + a[x1x1] ⊗ a[e] + b[x1] ⊗ a[x1]*a[e] + b[x1x1] ⊗ a[e]^2",
    ),
    (
        "a[x1x1x1]",
        "b[x1x1x1] ⊗ a[e] + 3*b[x1x1] ⊗ b[x1]*a[e] + b[x1] ⊗ b[x1x1]*a[e] + 3*b[x1x1] ⊗ a[x1] \
         + 3*b[x1] ⊗ b[x1]*a[x1] + 3*b[x1] ⊗ a[x1x1] + 3*a[x1x1] ⊗ b[x1] + a[x1] ⊗ b[x1x1]",
    ),
    (
        "a[x0x0]",
        "2*b[x0] ⊗ a[x0] + a[x1] ⊗ a[x0] + b[x0x0] ⊗ a[e] + a[x0x1] ⊗ a[e] + a[x1x0] ⊗ a[e] \
         + 3*b[x1] ⊗ a[x0]*a[e] + b[x0x1] ⊗ a[e]^2 + b[x1x0] ⊗ a[e]^2 + a[x1x1] ⊗ a[e]^2 \
         + b[x1x1] ⊗ a[e]^3",
    ),
];

/// Number of generators of degree `k = 1..=9`.
pub const GENERATOR_COUNTS: [u64; 9] = [2, 3, 5, 8, 13, 21, 34, 55, 89];

/// `dim H_k` for `k = 0..=9`.
pub const GRADED_DIMENSIONS: [u64; 10] = [1, 2, 6, 15, 38, 89, 210, 474, 1065, 2339];

/// Left coefficients at `x1^0..x1^3` of the inverse of `(1 + x1, 0)`.
pub const LINEARIZING_INVERSE_LEFT: [i64; 4] = [1, -1, 3, -15];

/// Both sides of the pre-Lie identity for `(x1, 0)`, `(0, x1)`, `(x0, 0)`.
pub const PRELIE_EXAMPLE: &str = "(2*x0x0x1 + x0x1x0, 2*x1x1x0 + x1x0x1)";
