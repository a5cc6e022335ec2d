//! Pairs of diagrams related by a framed isotopy move. A certified datum
//! must send both sides of each pair to the same map.

/// `(name, lhs, rhs)`
pub const MOVE_PAIRS: &[(&str, &str, &str)] = &[
    ("reidemeister II ++", "x++ ; xi++", "id+ id+"),
    ("reidemeister II +-", "x+- ; xi-+", "id+ id-"),
    ("reidemeister II -+", "x-+ ; xi+-", "id- id+"),
    ("reidemeister II --", "xi-- ; x--", "id- id-"),
    (
        "reidemeister III",
        "x++ id+ ; id+ x++ ; x++ id+",
        "id+ x++ ; x++ id+ ; id+ x++",
    ),
    (
        "reidemeister III mixed",
        "x++ id- ; id+ x+- ; x+- id+",
        "id+ x+- ; x+- id+ ; id- x++",
    ),
    ("snake on +, left", "cup_l id+ ; id+ cap_l", "id+"),
    ("snake on -, left", "id- cup_l ; cap_l id-", "id-"),
    ("snake on -, right", "cup_r id- ; id- cap_r", "id-"),
    ("snake on +, right", "id+ cup_r ; cap_r id+", "id+"),
    (
        "curl sides agree",
        "id+ cup_l ; x++ id- ; id+ cap_r",
        "cup_r id+ ; id- x++ ; cap_l id+",
    ),
    (
        "opposite curls cancel",
        "id+ cup_l ; x++ id- ; id+ cap_r ; id+ cup_l ; xi++ id- ; id+ cap_r",
        "id+",
    ),
    (
        "strand over a cup",
        "id+ cup_l ; x++ id- ; id+ xi+-",
        "cup_l id+",
    ),
    (
        "strand under a cap",
        "xi++ id- ; id+ x+- ; cap_r id+",
        "id+ cap_r",
    ),
    (
        "reidemeister II in a loop",
        "cup_r ; x-+ ; xi+- ; cap_l",
        "cup_r ; cap_l",
    ),
];
