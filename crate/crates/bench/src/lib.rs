//! Shared inputs for the benchmarks.

use weaving_core::BraidWord3;

/// Row indices used across benchmark groups.
pub const ROW_SIZES: [u32; 4] = [10, 30, 60, 100];

/// A fixed pseudo-random word of the given length over the four letters.
pub fn scrambled_word(len: usize) -> BraidWord3 {
    let mut state = 0x2545_f491_4f6c_dd1du64;
    let gens: Vec<i64> = (0..len)
        .map(|_| {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            [1, -1, 2, -2][(state % 4) as usize]
        })
        .collect();
    BraidWord3::from_signed(&gens).expect("generators are 1 or 2")
}
