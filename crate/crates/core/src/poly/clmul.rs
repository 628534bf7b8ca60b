//! Carry-less multiplication kernels.
//!
//! Every kernel here must produce bit-identical output; the per-bit naive
//! product is the reference the others are tested against.

/// Which multiplication kernel to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MulKernel {
    /// One shift-XOR per set coefficient bit. Reference only.
    Naive,
    /// Portable 4-bit window comb on 64-bit words.
    Comb,
    /// `PCLMULQDQ` on x86_64. Unavailable elsewhere.
    Clmul,
}

impl MulKernel {
    pub fn is_available(self) -> bool {
        match self {
            MulKernel::Naive | MulKernel::Comb => true,
            MulKernel::Clmul => hardware_clmul_available(),
        }
    }
}

pub(crate) fn hardware_clmul_available() -> bool {
    #[cfg(target_arch = "x86_64")]
    {
        std::is_x86_feature_detected!("pclmulqdq")
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        false
    }
}

/// 64x64 -> 128 carry-less product with a 16-entry window table.
#[inline]
pub(crate) fn clmul_word_comb(a: u64, b: u64) -> u128 {
    let a = a as u128;
    let mut table = [0u128; 16];
    for j in 1usize..16 {
        // table[j] = a * j, built from the lowest set bit.
        let low = j & j.wrapping_neg();
        table[j] = table[j ^ low] ^ (a << low.trailing_zeros());
    }
    let mut acc = 0u128;
    for nibble in (0..16).rev() {
        acc <<= 4;
        acc ^= table[((b >> (4 * nibble)) & 0xF) as usize];
    }
    acc
}

fn mul_words_comb(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &wa) in a.iter().enumerate() {
        if wa == 0 {
            continue;
        }
        for (j, &wb) in b.iter().enumerate() {
            let p = clmul_word_comb(wa, wb);
            out[i + j] ^= p as u64;
            out[i + j + 1] ^= (p >> 64) as u64;
        }
    }
    out
}

#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq", enable = "sse2")]
unsafe fn mul_words_pclmul(a: &[u64], b: &[u64]) -> Vec<u64> {
    use std::arch::x86_64::{_mm_clmulepi64_si128, _mm_cvtsi128_si64, _mm_set_epi64x, _mm_srli_si128};

    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &wa) in a.iter().enumerate() {
        if wa == 0 {
            continue;
        }
        let va = _mm_set_epi64x(0, wa as i64);
        for (j, &wb) in b.iter().enumerate() {
            let vb = _mm_set_epi64x(0, wb as i64);
            let p = _mm_clmulepi64_si128(va, vb, 0x00);
            let lo = _mm_cvtsi128_si64(p) as u64;
            let hi = _mm_cvtsi128_si64(_mm_srli_si128(p, 8)) as u64;
            out[i + j] ^= lo;
            out[i + j + 1] ^= hi;
        }
    }
    out
}

fn mul_words_naive(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len()];
    for (i, &wa) in a.iter().enumerate() {
        for bit in 0..64 {
            if (wa >> bit) & 1 == 1 {
                super::xor_shifted(&mut out, b, i * 64 + bit);
            }
        }
    }
    out
}

/// Raw word product; the caller normalizes. Returns `None` if the kernel is
/// not supported on this machine.
pub(crate) fn mul_words(a: &[u64], b: &[u64], kernel: MulKernel) -> Option<Vec<u64>> {
    match kernel {
        MulKernel::Naive => Some(mul_words_naive(a, b)),
        MulKernel::Comb => Some(mul_words_comb(a, b)),
        MulKernel::Clmul => {
            #[cfg(target_arch = "x86_64")]
            {
                if hardware_clmul_available() {
                    // SAFETY: the required CPU feature was detected at runtime.
                    return Some(unsafe { mul_words_pclmul(a, b) });
                }
            }
            None
        }
    }
}

/// Fastest kernel available on this machine.
pub(crate) fn mul_words_fast(a: &[u64], b: &[u64]) -> Vec<u64> {
    if hardware_clmul_available() {
        if let Some(out) = mul_words(a, b, MulKernel::Clmul) {
            return out;
        }
    }
    mul_words_comb(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn clmul_bitwise(a: u64, b: u64) -> u128 {
        let mut acc = 0u128;
        for i in 0..64 {
            if (b >> i) & 1 == 1 {
                acc ^= (a as u128) << i;
            }
        }
        acc
    }

    #[test]
    fn comb_matches_bitwise_on_edge_words() {
        let words = [0, 1, 2, 3, 0xF, 0x8000_0000_0000_0000, u64::MAX, 0xDEAD_BEEF_0123_4567];
        for &a in &words {
            for &b in &words {
                assert_eq!(clmul_word_comb(a, b), clmul_bitwise(a, b), "{a:#x} * {b:#x}");
            }
        }
    }

    #[test]
    fn hardware_kernel_matches_comb() {
        if !hardware_clmul_available() {
            return;
        }
        let a = [0x1234_5678_9abc_def0, u64::MAX, 7];
        let b = [u64::MAX, 0x8000_0000_0000_0001];
        assert_eq!(mul_words(&a, &b, MulKernel::Clmul), mul_words(&a, &b, MulKernel::Comb));
    }
}
