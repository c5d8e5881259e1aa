// Extended Cayley class tables of the bent functions, transcribed as
// (class, parameters, 2-rank, clique coefficients with the constant first).

use super::Params;

pub const C2_1: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(4, 1, 0, 0), 4, &[1, 4, 2]),
    (1, Params::Complete(4), 4, &[1, 4, 6, 4, 1]),
];

pub const C4_1: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(16, 6, 2, 2), 6, &[1, 16, 48, 32, 8]),
    (1, Params::Srg(16, 10, 6, 6), 6, &[1, 16, 80, 160, 120, 16]),
];

pub const C6_1: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(64, 28, 12, 12), 8, &[1, 64, 896, 3584, 5376, 3584, 1792, 512, 64]),
    (1, Params::Srg(64, 36, 20, 20), 8, &[1, 64, 1152, 7680, 19200, 13824, 2304]),
];

pub const C6_2: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(64, 28, 12, 12), 8, &[1, 64, 896, 3584, 5376, 3584, 1792, 512, 64]),
    (1, Params::Srg(64, 28, 12, 12), 8, &[1, 64, 896, 3584, 4352, 1536, 256]),
    (2, Params::Srg(64, 36, 20, 20), 8, &[1, 64, 1152, 7680, 20224, 19968, 8960, 1536, 192]),
];

pub const C6_3: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(64, 28, 12, 12), 12, &[1, 64, 896, 3584, 4608, 2048, 896, 256, 32]),
    (1, Params::Srg(64, 36, 20, 20), 12, &[1, 64, 1152, 7680, 20480, 21504, 9344, 1280, 160]),
    (2, Params::Srg(64, 28, 12, 12), 12, &[1, 64, 896, 3584, 4096, 1024, 64]),
    (3, Params::Srg(64, 36, 20, 20), 12, &[1, 64, 1152, 7680, 20480, 21504, 9792, 1664, 160]),
];

pub const C6_4: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(64, 28, 12, 12), 14, &[1, 64, 896, 3584, 4480, 1792, 896, 256, 32]),
    (1, Params::Srg(64, 28, 12, 12), 14, &[1, 64, 896, 3584, 4224, 1280, 448, 128, 16]),
    (2, Params::Srg(64, 36, 20, 20), 14, &[1, 64, 1152, 7680, 20608, 22272, 9664, 1408, 176]),
];

pub const C8_1: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(256, 120, 56, 56), 10, &[1, 256, 15360, 286720, 2007040, 6193152, 10321920, 8847360, 3317760, 245760]),
    (1, Params::Srg(256, 136, 72, 72), 10, &[1, 256, 17408, 417792, 3760128, 11698176, 11698176, 3342336, 417792]),
];

pub const C8_2: &[(usize, Params, usize, &[u64])] = &[
    (0, Params::Srg(256, 120, 56, 56), 10, &[1, 256, 15360, 286720, 2007040, 6193152, 10321920, 8847360, 3317760, 245760]),
    (1, Params::Srg(256, 120, 56, 56), 10, &[1, 256, 15360, 286720, 1875968, 4620288, 5079040, 2555904, 663552, 49152]),
    (2, Params::Srg(256, 136, 72, 72), 10, &[1, 256, 17408, 417792, 3891200, 14319616, 22183936, 13828096, 4055040, 327680]),
    (3, Params::Srg(256, 136, 72, 72), 10, &[1, 256, 17408, 417792, 3760128, 11698176, 11698176, 3342336, 417792]),
];
