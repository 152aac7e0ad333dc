//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so every line is printed even when a
//! criterion fails; the process exits non-zero if any hard criterion fails.
//! All reference values come from brute-force code in this file.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use scatlib::arch::{iota, zeta};
use scatlib::concat::{min_concat_all_universal, min_concat_binary, min_concat_general, WordSet};
use scatlib::oracle;
use scatlib::powers::{
    check_wwr_universality, iota_of_power, min_power_for_k, palindrome_iota,
    permutation_double_iota, BigCount,
};
use scatlib::simon::{equiv_k, normal_form, uncommon_square_witness};
use scatlib::trim::{shortest_deletion, Side};
use scatlib::word::normalize_many;
use scatlib::{Alphabet, Letter, MorphicPermutation, Word};

// ---------------------------------------------------------------- helpers

fn word(letters: &[Letter], sigma: usize) -> Word {
    Word::new(letters.to_vec(), Alphabet::new(sigma).unwrap()).unwrap()
}

fn ascii(s: &str) -> Word {
    Word::from_ascii(s)
}

fn show(letters: &[Letter]) -> String {
    letters
        .iter()
        .map(|&a| char::from(b'a' + a as u8 - 1))
        .collect()
}

/// Every word over `1..=sigma` of length `0..=max_len`, shortlex order.
fn all_words(sigma: usize, max_len: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * sigma);
        for v in &layer {
            for a in 1..=sigma as Letter {
                let mut v = v.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The universe used by several criteria: σ = 2 up to length 9, σ = 3 up to 7.
fn universe() -> Vec<(usize, Vec<Vec<Letter>>)> {
    vec![(2, all_words(2, 9)), (3, all_words(3, 7))]
}

fn is_subsequence(v: &[Letter], w: &[Letter]) -> bool {
    let mut it = w.iter();
    v.iter().all(|a| it.any(|b| b == a))
}

/// Greedy arch count over `1..=sigma`.
fn greedy_iota(w: &[Letter], sigma: usize) -> usize {
    if sigma == 0 {
        return usize::MAX;
    }
    let mut seen = vec![false; sigma + 1];
    let (mut count, mut arches) = (0, 0);
    for &a in w {
        if !seen[a as usize] {
            seen[a as usize] = true;
            count += 1;
            if count == sigma {
                arches += 1;
                count = 0;
                seen.iter_mut().for_each(|s| *s = false);
            }
        }
    }
    arches
}

fn greedy_zeta(w: &[Letter], sigma: usize) -> usize {
    (0..w.len().max(1))
        .map(|j| {
            let c: Vec<Letter> = w[j..].iter().chain(&w[..j]).copied().collect();
            greedy_iota(&c, sigma)
        })
        .max()
        .unwrap_or(0)
}

/// Bitsets of the scattered factors of each length `0..=kmax`; bit `code(v)`
/// with `code` the base-σ value of `v` (letters shifted to `0..σ`).
fn spectrum_bits(w: &[Letter], sigma: usize, kmax: usize) -> Vec<Vec<u64>> {
    let n = w.len();
    // next[i][a]: first position >= i holding a, or n.
    let mut next = vec![vec![n; sigma + 1]; n + 1];
    for i in (0..n).rev() {
        next[i] = next[i + 1].clone();
        next[i][w[i] as usize] = i;
    }
    let mut layers: Vec<Vec<u64>> = (0..=kmax)
        .map(|j| vec![0u64; sigma.pow(j as u32).div_ceil(64)])
        .collect();
    let mut stack = vec![(0usize, 0usize, 0usize)]; // (position, length, code)
    while let Some((pos, len, code)) = stack.pop() {
        layers[len][code / 64] |= 1 << (code % 64);
        if len == kmax {
            continue;
        }
        for (a, &p) in next[pos].iter().enumerate().skip(1) {
            if p < n {
                stack.push((p + 1, len + 1, code * sigma + a - 1));
            }
        }
    }
    layers
}

/// Full spectra signature for every `k <= kmax`: prefix of the layers.
fn signature(bits: &[Vec<u64>], k: usize) -> &[Vec<u64>] {
    &bits[..=k]
}

fn oracle_iota(w: &[Letter], sigma: usize) -> usize {
    let kmax = w.len() / sigma.max(1) + 1;
    let bits = spectrum_bits(w, sigma, kmax);
    (0..=kmax)
        .take_while(|&j| {
            bits[j]
                .iter()
                .map(|x| x.count_ones() as usize)
                .sum::<usize>()
                == sigma.pow(j as u32)
        })
        .last()
        .unwrap_or(0)
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(4, |n| n.get())
}

/// Runs `f` on indices `0..total` across threads; returns the failure count
/// and the first failure message.
fn parallel_count<F>(total: usize, f: F) -> (usize, Option<String>)
where
    F: Fn(usize) -> Result<(), String> + Sync,
{
    let failures = AtomicUsize::new(0);
    let first = std::sync::Mutex::new(None);
    let next = AtomicUsize::new(0);
    std::thread::scope(|s| {
        for _ in 0..threads() {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= total {
                    break;
                }
                if let Err(e) = f(i) {
                    failures.fetch_add(1, Ordering::Relaxed);
                    first.lock().unwrap().get_or_insert(e);
                }
            });
        }
    });
    (failures.into_inner(), first.into_inner().unwrap())
}

fn guarded<T>(f: impl FnOnce() -> T) -> Result<T, String> {
    catch_unwind(AssertUnwindSafe(f)).map_err(|e| {
        e.downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())
    })
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        pass: false,
        detail: detail.into(),
    }
}

fn verdict(checked: usize, failures: usize, first: Option<String>, what: &str) -> Outcome {
    if failures == 0 {
        pass(format!("{checked} {what}, 0 failures"))
    } else {
        fail(format!(
            "{failures}/{checked} {what} failed; first: {}",
            first.unwrap_or_default()
        ))
    }
}

// ------------------------------------------------------------- criteria

fn regressions() -> Outcome {
    let mut errors: Vec<String> = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            errors.push(what.to_string());
        }
    };
    let sq = |s: &str| ascii(&format!("{s}{s}"));
    check(iota(&ascii("aabb")) == 1, "ι(aabb)=1");
    check(iota(&sq("aabb")) == 3, "ι((aabb)²)=3");
    check(iota(&ascii("abcba")) == 1, "ι(abcba)=1");
    let w = ascii("abbccdabacdbdc");
    let z = zeta(&w);
    check(iota(&w) == 2, "ι(abbccdabacdbdc)=2");
    check(z.zeta == 3, "ζ(abbccdabacdbdc)=3");
    check(
        z.split == 1 && iota(&w.conjugate(1).unwrap()) == 3,
        "conjugate split after position 1 is 3-universal",
    );
    check(iota(&ascii("babccaabc")) == 2, "ι(babccaabc)=2");
    check(iota(&sq("babccaabc")) == 5, "ι((babccaabc)²)=5");
    check(zeta(&ascii("babccaabc")).zeta == 2, "ζ(babccaabc)=2");
    check(iota(&ascii("ababcc")) == 1, "ι(ababcc)=1");
    check(zeta(&ascii("ababcc")).zeta == 2, "ζ(ababcc)=2");
    check(iota(&sq("ababcc")) == 3, "ι((ababcc)²)=3");
    let swap = MorphicPermutation::new(vec![3, 2, 1]).unwrap();
    check(
        permutation_double_iota(&ascii("abcba"), &swap).map(|r| r.value) == Ok(3),
        "perm-double(abcba, a↔c)=3",
    );
    check(
        permutation_double_iota(&ascii("abcba"), &MorphicPermutation::identity(3)).map(|r| r.value)
            == Ok(2),
        "perm-double(abcba, id)=2",
    );
    let spec = oracle::scatfact_k(&ascii("aba"), 2).unwrap();
    let got: Vec<String> = spec.members.iter().map(|v| show(v)).collect();
    check(got == ["aa", "ab", "ba"], "ScatFact₂(aba)={aa,ab,ba}");

    let mut rng = StdRng::seed_from_u64(1);
    let mut universal = 0;
    for _ in 0..300 {
        let sigma = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=24);
        let letters: Vec<Letter> = (0..len)
            .map(|_| rng.gen_range(1..=sigma as Letter))
            .collect();
        let k = greedy_iota(&letters, sigma);
        if k == 0 {
            continue;
        }
        universal += 1;
        let expect: Vec<Letter> = (0..k).flat_map(|_| 1..=sigma as Letter).collect();
        for j in 1..=k {
            let expect = &expect[..j * sigma];
            if normal_form(&word(&letters, sigma), j).word.letters() != expect {
                errors.push(format!("nf({}, {j}) ≠ (1⋯σ)^{j}", show(&letters)));
            }
        }
    }
    if errors.is_empty() {
        pass(format!(
            "18 pinned values, nf of {universal} random universal words"
        ))
    } else {
        fail(errors.join("; "))
    }
}

fn congruence_oracle() -> Outcome {
    let mut checked_pairs = 0usize;
    let mut failures = 0usize;
    let mut first = None;
    for (sigma, words) in universe() {
        let bits: Vec<Vec<Vec<u64>>> = words.iter().map(|w| spectrum_bits(w, sigma, 5)).collect();
        let ws: Vec<Word> = words.iter().map(|w| word(w, sigma)).collect();
        for k in 0..=5 {
            let (f, e) = parallel_count(ws.len(), |i| {
                for j in i..ws.len() {
                    let expect = signature(&bits[i], k) == signature(&bits[j], k);
                    if equiv_k(&ws[i], &ws[j], k) != expect {
                        return Err(format!(
                            "equiv_k({}, {}, {k}) ≠ {expect}",
                            show(&words[i]),
                            show(&words[j])
                        ));
                    }
                }
                Ok(())
            });
            checked_pairs += ws.len() * (ws.len() + 1) / 2;
            failures += f;
            first = first.or(e);

            // nf(w) ~k w, and equal nfs exactly on oracle classes.
            let mut by_class: HashMap<&[Vec<u64>], Vec<Letter>> = HashMap::new();
            let mut by_nf: HashMap<Vec<Letter>, &[Vec<u64>]> = HashMap::new();
            for (i, w) in ws.iter().enumerate() {
                let nf = normal_form(w, k).word.letters().to_vec();
                let sig = signature(&bits[i], k);
                let nf_bits = spectrum_bits(&nf, sigma, k);
                let mut bad = nf_bits.as_slice() != sig;
                bad |= by_class.entry(sig).or_insert_with(|| nf.clone()) != &nf;
                bad |= *by_nf.entry(nf.clone()).or_insert(sig) != sig;
                if bad {
                    failures += 1;
                    first = first.or(Some(format!(
                        "nf({}, {k}) = {} not canonical",
                        show(&words[i]),
                        show(&nf)
                    )));
                }
            }
        }
    }
    verdict(
        checked_pairs,
        failures,
        first,
        "pairs (plus nf congruence and canonicity)",
    )
}

fn normal_form_minimality() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    let cases: Vec<(usize, Vec<Letter>, usize)> = (0..500)
        .map(|_| {
            let sigma = rng.gen_range(1..=3);
            let len = rng.gen_range(1..=8);
            let w: Vec<Letter> = (0..len)
                .map(|_| rng.gen_range(1..=sigma as Letter))
                .collect();
            let k = rng.gen_range(1..=len.min(5));
            (sigma, w, k)
        })
        .collect();
    let (failures, first) = parallel_count(cases.len(), |i| {
        let (sigma, w, k) = &cases[i];
        let (sigma, k) = (*sigma, *k);
        let nf = normal_form(&word(w, sigma), k).word.letters().to_vec();
        let target = spectrum_bits(w, sigma, k);
        // The shortlex-first congruent word must be nf itself.
        let found = all_words(sigma, nf.len())
            .into_iter()
            .find(|v| spectrum_bits(v, sigma, k) == target);
        match found {
            Some(v) if v == nf => Ok(()),
            other => Err(format!(
                "nf({}, {k}) = {}, shortlex minimum {:?}",
                show(w),
                show(&nf),
                other.map(|v| show(&v))
            )),
        }
    });
    verdict(cases.len(), failures, first, "random (w, k)")
}

fn universality_index() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    let mut first = None;
    for (sigma, words) in universe() {
        for w in &words {
            checked += 1;
            let got = iota(&word(w, sigma));
            let expect = oracle_iota(w, sigma);
            if got != expect {
                failures += 1;
                first = first.or(Some(format!("ι({}) = {got}, oracle {expect}", show(w))));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(4);
    for _ in 0..1000 {
        checked += 1;
        let sigma = rng.gen_range(1..=5);
        let len = rng.gen_range(0..=40);
        let letters: Vec<Letter> = (0..len)
            .map(|_| rng.gen_range(1..=sigma as Letter))
            .collect();
        let w = word(&letters, sigma);
        let mut map: Vec<Letter> = (1..=sigma as Letter).collect();
        map.shuffle(&mut rng);
        let pi = MorphicPermutation::new(map).unwrap();
        let i = iota(&w);
        if i != iota(&w.reverse())
            || i != iota(&pi.apply(&w).unwrap())
            || i != greedy_iota(&letters, sigma)
        {
            failures += 1;
            first = first.or(Some(format!("invariance fails on {}", show(&letters))));
        }
    }
    verdict(
        checked,
        failures,
        first,
        "words (universe + 1000 reversal/permutation)",
    )
}

fn random_covering(rng: &mut StdRng, sigma: usize, max_len: usize) -> Vec<Letter> {
    loop {
        let len = rng.gen_range(sigma..=max_len.max(sigma));
        let w: Vec<Letter> = (0..len)
            .map(|_| rng.gen_range(1..=sigma as Letter))
            .collect();
        if greedy_iota(&w, sigma) >= 1 {
            return w;
        }
    }
}

fn minimal_power() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut failures = 0;
    let mut first = None;
    for _ in 0..300 {
        let sigma = rng.gen_range(1..=4);
        let w = random_covering(&mut rng, sigma, 10);
        let k = rng.gen_range(0..=30usize);
        let naive = (0..=40usize).find(|&l| greedy_iota(&w.repeat(l), sigma) >= k);
        let got = min_power_for_k(&word(&w, sigma), &BigCount::from(k)).unwrap();
        if naive.map(BigCount::from) != Some(got.clone()) {
            failures += 1;
            first = first.or(Some(format!(
                "min_power({}, {k}) = {got}, naive {naive:?}",
                show(&w)
            )));
        }
    }
    // Binary words: ι(w^ℓ) = ℓι + (ℓ-1)[ζ = ι+1].
    let mut binary = 0;
    for _ in 0..300 {
        let w = random_covering(&mut rng, 2, 14);
        let i = greedy_iota(&w, 2) as u128;
        let bonus = greedy_zeta(&w, 2) as u128 == i + 1;
        let mut ks: Vec<u128> = vec![1, 2, 10u128.pow(18)];
        ks.extend((0..4).map(|_| rng.gen_range(1..=10u128.pow(18))));
        for k in ks {
            binary += 1;
            let expect = if bonus {
                (k + 1).div_ceil(i + 1)
            } else {
                k.div_ceil(i)
            };
            let got = min_power_for_k(&word(&w, 2), &k.to_string().parse().unwrap()).unwrap();
            if got.to_string() != expect.to_string() {
                failures += 1;
                first = first.or(Some(format!(
                    "binary min_power({}, {k}) = {got}, closed form {expect}",
                    show(&w)
                )));
            }
        }
    }
    verdict(
        300 + binary,
        failures,
        first,
        "cases (300 naive, rest binary closed form)",
    )
}

fn circular_bonus() -> Outcome {
    let mut rng = StdRng::seed_from_u64(6);
    let mut sampled = 0;
    let mut failures = 0;
    let mut first = None;
    let mut tries = 0;
    while sampled < 200 && tries < 200_000 {
        tries += 1;
        let sigma = rng.gen_range(1..=4);
        let w = random_covering(&mut rng, sigma, 16);
        let i = greedy_iota(&w, sigma);
        if greedy_zeta(&w, sigma) != i + 1 {
            continue;
        }
        sampled += 1;
        for s in 1..=5usize {
            let direct = greedy_iota(&w.repeat(s), sigma);
            let lib = iota_of_power(&word(&w, sigma), &BigCount::from(s)).map(|v| v.to_string());
            let expect = s * i + s - 1;
            if direct != expect || lib != Ok(expect.to_string()) {
                failures += 1;
                first = first.or(Some(format!("ι({}^{s}) ≠ {expect}", show(&w))));
            }
        }
    }
    let pin = ascii("babccaabc");
    let pin_ok = iota(&pin.power(2)) == 5 && zeta(&pin).zeta == 2 && iota(&pin) == 2;
    if !pin_ok {
        return fail("babccaabc pin failed");
    }
    if sampled < 100 {
        return fail(format!("only {sampled} instances with ζ = ι + 1"));
    }
    verdict(
        sampled,
        failures,
        first,
        "words with ζ = ι+1, s ∈ [1,5]; babccaabc pin holds",
    )
}

fn square_stability() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    let mut first = None;
    for (sigma, words) in universe() {
        for w in &words {
            let ww = w.repeat(2);
            let a = spectrum_bits(w, sigma, 5);
            let b = spectrum_bits(&ww, sigma, 5);
            // Spectra ignore unused letters of Σ, so ι is taken over alph(w).
            let i = own_iota(w);
            let lw = word(w, sigma);
            for k in 0..=5 {
                checked += 1;
                // Full spectra: with k > 2|w| the length-k layers are both empty.
                let stable = signature(&a, k) == signature(&b, k);
                if (i >= k) != stable
                    || scatlib::powers::spectra_stable_under_square(&lw, k) != stable
                {
                    failures += 1;
                    first = first.or(Some(format!("square stability for {} at k={k}", show(w))));
                }
            }
            for n in 1..=4 {
                if iota(&lw.power(n)) < n * iota(&lw) {
                    failures += 1;
                    first = first.or(Some(format!("ι({}^{n}) < {n}ι", show(w))));
                }
            }
        }
    }
    verdict(
        checked,
        failures,
        first,
        "(w, k) pairs, plus ι(w^n) ≥ nι(w)",
    )
}

/// Length of the shortest word in ScatFact(ww) \ ScatFact(w) and the
/// shortlex-first such word, by breadth-first search over lengths.
fn shortest_uncommon_in_square(w: &[Letter], sigma: usize) -> (usize, Vec<Letter>) {
    let ww = w.repeat(2);
    for len in 1.. {
        let mut v = vec![1 as Letter; len];
        loop {
            if is_subsequence(&v, &ww) && !is_subsequence(&v, w) {
                return (len, v);
            }
            // odometer increment
            let mut i = len;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if (v[i] as usize) < sigma {
                    v[i] += 1;
                    break;
                }
                v[i] = 1;
            }
            if i == 0 && v.iter().all(|&a| a == 1) {
                break;
            }
        }
    }
    unreachable!()
}

fn uncommon_square() -> Outcome {
    let mut words = Vec::new();
    for sigma in 1..=3usize {
        for w in all_words(sigma, 12) {
            if !w.is_empty() && greedy_iota(&w, sigma) >= 1 {
                words.push((sigma, w));
            }
        }
    }
    let (failures, first) = parallel_count(words.len(), |i| {
        let (sigma, w) = &words[i];
        let witness = uncommon_square_witness(&word(w, *sigma)).map_err(|e| e.to_string())?;
        let v = witness.letters();
        let (shortest, _) = shortest_uncommon_in_square(w, *sigma);
        let ww = w.repeat(2);
        let ok = v.len() == greedy_iota(w, *sigma) + 1
            && v.len() == shortest
            && is_subsequence(v, &ww)
            && !is_subsequence(v, w);
        if ok {
            Ok(())
        } else {
            Err(format!(
                "witness {} for {} (shortest {shortest})",
                show(v),
                show(w)
            ))
        }
    });
    verdict(words.len(), failures, first, "words of length ≤ 12, σ ≤ 3")
}

/// Least ℓ ≤ 5 with some concatenation of ℓ words k-universal.
fn brute_concat(words: &[Vec<Letter>], sigma: usize, k: usize) -> Option<usize> {
    if k == 0 {
        return Some(0);
    }
    let p = words.len();
    for l in 1..=5u32 {
        for code in 0..p.pow(l) {
            let mut c = code;
            let mut cat = Vec::new();
            for _ in 0..l {
                cat.extend_from_slice(&words[c % p]);
                c /= p;
            }
            if greedy_iota(&cat, sigma) >= k {
                return Some(l as usize);
            }
        }
    }
    None
}

fn concatenation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(9);
    let mut cases = Vec::new();
    while cases.len() < 3000 {
        let sigma = rng.gen_range(1..=3u32);
        let p = rng.gen_range(1..=3);
        let raw: Vec<Vec<u32>> = (0..p)
            .map(|_| {
                (0..rng.gen_range(1..=6))
                    .map(|_| rng.gen_range(1..=sigma))
                    .collect()
            })
            .collect();
        let refs: Vec<&[u32]> = raw.iter().map(Vec::as_slice).collect();
        let (words, _) = normalize_many(&refs);
        cases.push(words);
    }
    let (failures, first) = parallel_count(cases.len(), |i| {
        let words = &cases[i];
        let ws = WordSet::new(words.clone()).map_err(|e| e.to_string())?;
        let sigma = ws.sigma();
        let letters: Vec<Vec<Letter>> = words.iter().map(|w| w.letters().to_vec()).collect();
        let name = letters
            .iter()
            .map(|w| show(w))
            .collect::<Vec<_>>()
            .join(",");
        for k in 1..=12usize {
            let big = BigCount::from(k);
            let general = min_concat_general(&ws, &big).map_err(|e| e.to_string())?;
            let mut answers = vec![("general", general.clone())];
            if ws.all_universal() {
                answers.push((
                    "universal",
                    min_concat_all_universal(&ws, &big).map_err(|e| e.to_string())?,
                ));
            }
            if sigma == 2 {
                answers.push((
                    "binary",
                    min_concat_binary(&ws, &big).map_err(|e| e.to_string())?,
                ));
            }
            if let Some((path, v)) = answers.iter().find(|(_, v)| *v != general) {
                return Err(format!(
                    "{{{name}}} k={k}: {path} = {v}, general = {general}"
                ));
            }
            if k <= 4 {
                let brute = brute_concat(&letters, sigma, k);
                let agrees = match brute {
                    Some(l) => general == BigCount::from(l),
                    None => general > BigCount::from(5usize),
                };
                if !agrees {
                    return Err(format!(
                        "{{{name}}} k={k}: DP {general}, brute force {brute:?}"
                    ));
                }
            }
        }
        Ok(())
    });
    verdict(
        cases.len(),
        failures,
        first,
        "random word sets (brute force k ≤ 4, paths agree k ≤ 12)",
    )
}

fn trimming() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    let mut first = None;
    for (sigma, words) in universe() {
        for w in &words {
            let lw = word(w, sigma);
            let n = w.len();
            let total = greedy_iota(w, sigma);
            for ell in 0..total {
                for side in [Side::Suffix, Side::Prefix] {
                    checked += 1;
                    let naive = (0..=n).find(|&d| {
                        let kept = match side {
                            Side::Suffix => &w[..n - d],
                            Side::Prefix => &w[d..],
                        };
                        oracle_iota(kept, sigma) == ell
                    });
                    let got = shortest_deletion(&lw, ell, side).map(|d| d.deleted).ok();
                    if got != naive {
                        failures += 1;
                        first = first.or(Some(format!(
                            "trim {} ℓ={ell} {side}: {got:?} vs {naive:?}",
                            show(w)
                        )));
                    }
                }
            }
            if shortest_deletion(&lw, total, Side::Suffix).is_ok() {
                failures += 1;
                first = first.or(Some(format!("trim {} accepted ℓ = ι", show(w))));
            }
        }
    }
    verdict(checked, failures, first, "(w, ℓ, side) cases")
}

fn palindromes_and_reversal() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    let mut first = None;
    for sigma in 1..=3usize {
        for half in all_words(sigma, 6) {
            let mut mids: Vec<Option<Letter>> = vec![None];
            if half.len() < 6 {
                mids.extend((1..=sigma as Letter).map(Some));
            }
            for mid in mids {
                let mut p = half.clone();
                p.extend(mid);
                p.extend(half.iter().rev());
                checked += 1;
                let got = guarded(|| palindrome_iota(&word(&p, sigma)));
                if got != Ok(Ok(greedy_iota(&p, sigma))) {
                    failures += 1;
                    first = first.or(Some(format!("palindrome {}", show(&p))));
                }
            }
        }
    }
    for (sigma, words) in universe() {
        for w in &words {
            let mut wwr = w.clone();
            wwr.extend(w.iter().rev());
            let a = spectrum_bits(w, sigma, 5);
            let b = spectrum_bits(&wwr, sigma, 5);
            let own_iota = own_iota(w);
            for k in 0..=5 {
                checked += 1;
                let r = guarded(|| check_wwr_universality(&word(w, sigma), k));
                let expect = signature(&a, k) == signature(&b, k);
                let ok = matches!(r, Ok(c) if c.by_index == c.by_congruence
                    && c.by_congruence == expect
                    && c.by_index == (own_iota >= k));
                if !ok {
                    failures += 1;
                    first = first.or(Some(format!("wwR check on {} at k={k}", show(w))));
                }
            }
        }
    }
    verdict(
        checked,
        failures,
        first,
        "palindromes and (w, k) reversal checks",
    )
}

/// ι over the letters occurring in `w`; the empty word counts as universal.
fn own_iota(w: &[Letter]) -> usize {
    if w.is_empty() {
        return usize::MAX;
    }
    let d = dense(w);
    let own = *d.iter().max().unwrap() as usize;
    oracle_iota(&d, own)
}

/// Relabels the letters of `w` onto `1..=|alph(w)|` in increasing order.
fn dense(w: &[Letter]) -> Vec<Letter> {
    let mut present: Vec<Letter> = w.to_vec();
    present.sort_unstable();
    present.dedup();
    w.iter()
        .map(|a| present.binary_search(a).unwrap() as Letter + 1)
        .collect()
}

fn best_of<T>(reps: usize, mut f: impl FnMut() -> T) -> Duration {
    (0..reps)
        .map(|_| {
            let t = Instant::now();
            std::hint::black_box(f());
            t.elapsed()
        })
        .min()
        .unwrap()
}

fn performance() -> (Outcome, Option<String>) {
    let mut rng = StdRng::seed_from_u64(12);
    let sizes = [200_000usize, 400_000, 800_000, 1_600_000];
    let mut nf_times = Vec::new();
    let mut iota_times = Vec::new();
    let random = |rng: &mut StdRng, n: usize| {
        word(
            &(0..n).map(|_| rng.gen_range(1..=26)).collect::<Vec<_>>(),
            26,
        )
    };
    for &n in &sizes {
        let w = random(&mut rng, n);
        nf_times.push(best_of(3, || normal_form(&w, n / 2)));
        iota_times.push(best_of(3, || iota(&w)));
    }
    let ratios = |t: &[Duration]| -> Vec<f64> {
        t.windows(2)
            .map(|p| p[1].as_secs_f64() / p[0].as_secs_f64())
            .collect()
    };
    let (rn, ri) = (ratios(&nf_times), ratios(&iota_times));
    let fmt = |r: &[f64]| {
        r.iter()
            .map(|x| format!("{x:.2}"))
            .collect::<Vec<_>>()
            .join("/")
    };
    let ok = rn.iter().chain(&ri).all(|&r| r <= 2.5);
    let detail = format!("nf ratios {} , ι ratios {} (bound 2.5)", fmt(&rn), fmt(&ri));

    let w = random(&mut rng, 1_000_000);
    let tn = best_of(1, || normal_form(&w, 500_000));
    let ti = best_of(1, || iota(&w));
    let soft = format!(
        "n=10^6: nf {:.0} ms, ι {:.1} ms (soft bound 1 s)",
        tn.as_secs_f64() * 1e3,
        ti.as_secs_f64() * 1e3
    );
    let warn = (tn > Duration::from_secs(1) || ti > Duration::from_secs(1)).then(|| soft.clone());
    let outcome = if ok {
        pass(format!("{detail}; {soft}"))
    } else {
        fail(format!("{detail}; {soft}"))
    };
    (outcome, warn)
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("01", "regression examples [exact]", regressions),
        (
            "02",
            "~k against spectrum oracle, nf congruent and canonical [exact, 100%]",
            congruence_oracle,
        ),
        (
            "03",
            "nf is the shortlex minimum of its class [0 failures]",
            normal_form_minimality,
        ),
        (
            "04",
            "ι against oracle; reversal/permutation invariance [exact]",
            universality_index,
        ),
        (
            "05",
            "least power reaching k-universality [exact, k ≤ 10^18]",
            minimal_power,
        ),
        (
            "06",
            "ι(w^s) = sι + s − 1 when ζ = ι + 1 [exact]",
            circular_bonus,
        ),
        (
            "07",
            "ι ≥ k iff spectra stable under squaring [exact]",
            square_stability,
        ),
        (
            "08",
            "uncommon scattered factor of ww vs w [0 failures]",
            uncommon_square,
        ),
        (
            "09",
            "minimal concatenation solvers vs brute force [0 failures]",
            concatenation,
        ),
        (
            "10",
            "shortest prefix/suffix deletion vs naive scan [exact]",
            trimming,
        ),
        (
            "11",
            "palindrome ι and w·w^R congruence [exact]",
            palindromes_and_reversal,
        ),
    ];
    // Library assertions report through panics; keep the output to our lines.
    std::panic::set_hook(Box::new(|_| {}));
    let mut all_pass = true;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = guarded(run).unwrap_or_else(|e| fail(format!("panicked: {e}")));
        all_pass &= outcome.pass;
        println!(
            "[{id}] {} {name}: {} ({:.1} s)",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    let start = Instant::now();
    let (outcome, warn) = performance();
    all_pass &= outcome.pass;
    println!(
        "[12] {} linear scaling of nf and ι on σ = 26 [ratio ≤ 2.5]: {} ({:.1} s)",
        if outcome.pass { "PASS" } else { "FAIL" },
        outcome.detail,
        start.elapsed().as_secs_f64()
    );
    if let Some(w) = warn {
        println!("[12] WARN soft time bound exceeded: {w}");
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
