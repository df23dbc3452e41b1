#![allow(dead_code, clippy::needless_range_loop)]

use std::panic;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wavescale::checkpoint::{Checkpoint, DType, TensorEntry};
use wavescale::consolidate::{Arch, DimRole, GroupPolicy};
use wavescale::container;
use wavescale::filters::FilterBank;
use wavescale::tensor::Tensor3;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_vec(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}

pub fn random_tensor(rng: &mut impl Rng, dims: [usize; 3]) -> Tensor3 {
    Tensor3::from_fn(dims, |_| rng.gen_range(-1.0..1.0))
}

/// Dense `n x n` one-level analysis operator: rows `0..n/2` give the
/// approximation, rows `n/2..n` the detail. Built as circular convolution
/// followed by keeping every second sample starting at `L/2`.
pub fn analysis_matrix(bank: &FilterBank, n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for (half, filter) in [&bank.dec_lo, &bank.dec_hi].into_iter().enumerate() {
        let shift = filter.len() / 2;
        for col in 0..n {
            // Response of the filter to a unit impulse at `col`.
            let mut conv = vec![0.0; n];
            for (j, g) in filter.iter().enumerate() {
                conv[(col + j) % n] += g;
            }
            for k in 0..n / 2 {
                m[half * n / 2 + k][col] = conv[(2 * k + shift) % n];
            }
        }
    }
    m
}

/// Dense `n x n` one-level synthesis operator taking `[approx; detail]`.
/// Upsamples by inserting zeros, then convolves circularly with the
/// reconstruction filters, advanced by `L/2 - 1` samples.
pub fn synthesis_matrix(bank: &FilterBank, n: usize) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; n]; n];
    for (half, filter) in [&bank.rec_lo, &bank.rec_hi].into_iter().enumerate() {
        let len = filter.len();
        for k in 0..n / 2 {
            let mut up = vec![0.0; n];
            up[2 * k] = 1.0;
            for out in 0..n {
                let mut acc = 0.0;
                for (j, g) in filter.iter().enumerate() {
                    // y[out] = sum_j g[j] * up[out - j - 1 + L/2]
                    let src = (out as i64 - j as i64 - 1 + (len / 2) as i64).rem_euclid(n as i64);
                    acc += g * up[src as usize];
                }
                m[out][half * n / 2 + k] = acc;
            }
        }
    }
    m
}

pub fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter()
        .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
        .collect()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Size of a `fixed` dim in the synthetic checkpoints, by tensor name.
fn fixed_size(name: &str, position: usize) -> usize {
    match name {
        "embeddings.word_embeddings.weight" => 30522,
        "wte.weight" => 50257,
        "embeddings.position_embeddings.weight" => 512,
        "wpe.weight" => 1024,
        "embeddings.token_type_embeddings.weight" => 2,
        "cls_token" => 1,
        "pos_embed" if position == 0 => 1,
        "pos_embed" => 197,
        "patch_embed.proj.weight" => 3 * 16 * 16,
        _ => 4,
    }
}

/// Names and shapes of a checkpoint holding one tensor per rule of `policy`
/// (per layer for layered rules), sized for `arch`. `fixed_scale` divides
/// fixed dims to keep tests light where vocabularies do not matter.
pub fn synthetic_layout(
    policy: &GroupPolicy,
    arch: &Arch,
    fixed_scale: usize,
) -> Vec<(String, Vec<usize>)> {
    let mut out = Vec::new();
    for rule in &policy.rules {
        let roles = rule.dims.as_ref().expect("synthetic rules need dims");
        let names: Vec<String> = if rule.is_layered() {
            (0..arch.layers)
                .map(|i| rule.pattern().replace("{}", &i.to_string()))
                .collect()
        } else {
            vec![rule.pattern()]
        };
        for name in names {
            let shape = roles
                .iter()
                .enumerate()
                .map(|(p, r)| match r {
                    DimRole::Fixed => (fixed_size(&name, p) / fixed_scale).max(1),
                    r => r.size_in(arch).unwrap(),
                })
                .collect();
            out.push((name, shape));
        }
    }
    out.sort();
    out
}

pub fn synthetic_checkpoint(
    policy: &GroupPolicy,
    arch: &Arch,
    fixed_scale: usize,
    seed: u64,
) -> Checkpoint {
    let mut rng = rng(seed);
    let mut ckpt = Checkpoint::new();
    for (name, shape) in synthetic_layout(policy, arch, fixed_scale) {
        let n = shape.iter().product();
        let data = (0..n).map(|_| rng.gen_range(-0.1..0.1)).collect();
        ckpt.insert(name, TensorEntry::new(DType::F32, &shape, data).unwrap())
            .unwrap();
    }
    ckpt
}

/// Names and shapes, for comparing checkpoint layouts.
pub fn layout(ckpt: &Checkpoint) -> Vec<(String, Vec<usize>)> {
    ckpt.iter()
        .map(|(n, e)| (n.to_string(), e.shape().to_vec()))
        .collect()
}

pub fn seed_container() -> Vec<u8> {
    let mut c = Checkpoint::new();
    c.insert(
        "a.weight",
        TensorEntry::new(DType::F32, &[2, 3], vec![1.0; 6]).unwrap(),
    )
    .unwrap();
    c.insert(
        "b",
        TensorEntry::new(DType::F64, &[3], vec![0.5, -2.0, 7.0]).unwrap(),
    )
    .unwrap();
    c.insert(
        "c.x",
        TensorEntry::new(DType::F32, &[1, 1, 1], vec![3.0]).unwrap(),
    )
    .unwrap();
    container::to_bytes(&c).unwrap()
}

/// Streams of four kinds: raw noise, noise behind a valid prefix, mutated
/// valid files and truncated valid files.
pub fn fuzz_streams(count: usize, seed: u64) -> Vec<Vec<u8>> {
    let mut rng = rng(seed);
    let valid = seed_container();
    (0..count)
        .map(|i| match i % 4 {
            0 => {
                let n = rng.gen_range(0..200);
                (0..n).map(|_| rng.gen()).collect()
            }
            1 => {
                let mut v = b"WGT1\x01\0\0\0".to_vec();
                let n = rng.gen_range(0..200);
                v.extend((0..n).map(|_| rng.gen::<u8>()));
                v
            }
            2 => {
                let mut v = valid.clone();
                for _ in 0..rng.gen_range(1..6) {
                    let at = rng.gen_range(0..v.len());
                    match rng.gen_range(0..3) {
                        0 => v[at] ^= 1 << rng.gen_range(0..8),
                        1 => v[at] = rng.gen(),
                        _ => v.insert(at, rng.gen()),
                    }
                }
                v
            }
            _ => valid[..rng.gen_range(0..valid.len())].to_vec(),
        })
        .collect()
}

/// Reads every stream. Returns (valid, rejected) counts, or the index of a
/// stream that panicked or decoded to a checkpoint that does not survive a
/// write and re-read.
pub fn run_fuzz(streams: &[Vec<u8>]) -> Result<(usize, usize), usize> {
    let hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut counts = (0, 0);
    let mut bad = None;
    for (i, s) in streams.iter().enumerate() {
        match panic::catch_unwind(|| container::from_bytes(s)) {
            Ok(Ok(ckpt)) => {
                let again = container::to_bytes(&ckpt).and_then(|b| container::from_bytes(&b));
                if !again.is_ok_and(|c| c.bit_eq(&ckpt)) {
                    bad = Some(i);
                    break;
                }
                counts.0 += 1;
            }
            Ok(Err(e)) => {
                assert!(!e.code().is_empty());
                counts.1 += 1;
            }
            Err(_) => {
                bad = Some(i);
                break;
            }
        }
    }
    panic::set_hook(hook);
    bad.map_or(Ok(counts), Err)
}
