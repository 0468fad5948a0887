"""Security metrics for plain/cipher image pairs, plus the differential and
key-sensitivity campaigns.

Conventions:

* images are 2D numpy arrays of uint8 (or integer arrays in 0..255);
* percentages are returned in [0, 100], entropies in bits;
* correlation coefficients are undefined when a variance term vanishes
  (constant image); such values are returned as None, never raised.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field

import numpy as np

from .cipher import decrypt, encrypt
from .dna import BASES, ENC_PACK
from .keystream import KeySchedule, SecretKey, derive_schedule, generate_key

_LEVELS = 256


def _flat(img) -> np.ndarray:
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"expected a non-empty 2D image, got shape {arr.shape}")
    return arr.reshape(-1).astype(np.int64)


def _check_same_shape(a, b):
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"image dimensions differ: {a.shape} vs {b.shape}")
    return a, b


def histogram(img) -> np.ndarray:
    return np.bincount(_flat(img), minlength=_LEVELS)


# -- histogram uniformity -----------------------------------------------------

def histogram_uniformity(img) -> tuple[float, float]:
    """(chi2 against the flat histogram, variance of histogram bin counts)."""
    f = histogram(img).astype(np.float64)
    n = f.sum()
    f0 = n / _LEVELS
    chi2 = float(((f - f0) ** 2).sum() / f0)
    # (1/256^2) * sum_ij (f_i - f_j)^2 / 2, via the second-moment identity
    hist_var = float((_LEVELS * (f ** 2).sum() - n ** 2) / _LEVELS ** 2)
    return chi2, hist_var


def deviation_metrics(plain, cipher) -> tuple[float, float, float]:
    """(deviation from ideality, maximum deviation, irregular deviation)."""
    plain, cipher = _check_same_shape(plain, cipher)
    hw = plain.size
    fp = histogram(plain).astype(np.float64)
    fc = histogram(cipher).astype(np.float64)
    f0 = hw / _LEVELS
    di = float(np.abs(fc - f0).sum() / hw)
    d = np.abs(fp - fc)
    md = float(((d[0] + d[255]) / 2.0 + d[1:255].sum()) / hw)
    id_ = float(np.abs(d - d.mean()).sum() / hw)
    return di, md, id_


# -- DNA sequence metrics -----------------------------------------------------

def _packed_dna(img, rules: np.ndarray) -> np.ndarray:
    return ENC_PACK[rules.astype(np.int64) - 1, _flat(img)]


def _base_counts(packed: np.ndarray) -> np.ndarray:
    counts = np.zeros(4, np.int64)
    for s in (6, 4, 2, 0):
        counts += np.bincount((packed >> s) & 3, minlength=4)
    return counts


def base_ratios(packed: np.ndarray) -> dict[str, float]:
    counts = _base_counts(packed)
    total = counts.sum()
    return {BASES[i]: 100.0 * counts[i] / total for i in range(4)}


def dna_sequence_metrics(plain, cipher, sched: KeySchedule):
    """Hamming distance between the plain (rsq2-encoded) and cipher
    (rsq4-encoded) DNA sequences, plus base ratios of both."""
    plain, cipher = _check_same_shape(plain, cipher)
    if plain.size != sched.h * sched.w:
        raise ValueError("schedule does not match the image dimensions")
    pq = _packed_dna(plain, sched.rsq2)
    cq = _packed_dna(cipher, sched.rsq4)
    x = pq ^ cq
    hd = sum(int(np.count_nonzero((x >> s) & 3)) for s in (6, 4, 2, 0))
    return hd, base_ratios(pq), base_ratios(cq)


def fixed_point_ratio(plain, cipher) -> float:
    plain, cipher = _check_same_shape(plain, cipher)
    return 100.0 * float(np.count_nonzero(plain == cipher)) / plain.size


# -- correlation --------------------------------------------------------------

def _pearson(x: np.ndarray, y: np.ndarray) -> float | None:
    x = x.astype(np.float64)
    y = y.astype(np.float64)
    dx = x - x.mean()
    dy = y - y.mean()
    vx = (dx ** 2).mean()
    vy = (dy ** 2).mean()
    if vx == 0.0 or vy == 0.0:
        return None
    return float((dx * dy).mean() / math.sqrt(vx * vy))


def adjacent_correlations(img) -> tuple[float | None, float | None]:
    """Pearson correlation over all horizontally / vertically adjacent pairs."""
    arr = np.asarray(img)
    if arr.ndim != 2 or arr.shape[0] < 2 or arr.shape[1] < 2:
        raise ValueError(f"need at least a 2x2 image, got shape {arr.shape}")
    ch = _pearson(arr[:, :-1].ravel(), arr[:, 1:].ravel())
    cv = _pearson(arr[:-1, :].ravel(), arr[1:, :].ravel())
    return ch, cv


def correlation_2d(plain, cipher) -> float | None:
    plain, cipher = _check_same_shape(plain, cipher)
    return _pearson(plain.ravel(), cipher.ravel())


@dataclass(frozen=True)
class CorrelationReport:
    plain_h: float | None
    plain_v: float | None
    cipher_h: float | None
    cipher_v: float | None
    plain_cipher_2d: float | None


def correlation_metrics(plain, cipher) -> CorrelationReport:
    ph, pv = adjacent_correlations(plain)
    ch, cv = adjacent_correlations(cipher)
    return CorrelationReport(ph, pv, ch, cv, correlation_2d(plain, cipher))


# -- entropy ------------------------------------------------------------------

def global_entropy(img) -> float:
    f = histogram(img)
    p = f[f > 0] / f.sum()
    return float(-(p * np.log2(p)).sum())


def local_entropy(img, blocksize: int) -> float:
    """Mean Shannon entropy over all non-overlapping blocksize^2 blocks."""
    arr = np.asarray(img)
    h, w = arr.shape
    if blocksize < 1 or h % blocksize or w % blocksize:
        raise ValueError(f"block size {blocksize} does not divide {h}x{w}")
    vals = [
        global_entropy(arr[i:i + blocksize, j:j + blocksize])
        for i in range(0, h, blocksize)
        for j in range(0, w, blocksize)
    ]
    return float(np.mean(vals))


def entropy_metrics(img, blocksizes=()) -> tuple[float, dict[int, float]]:
    return global_entropy(img), {b: local_entropy(img, b) for b in blocksizes}


# -- perceptual quality -------------------------------------------------------

def perceptual_metrics(plain, cipher) -> tuple[float, float, float, float, float]:
    """(mae, mse, psnr, spectral distortion, global ssim)."""
    plain, cipher = _check_same_shape(plain, cipher)
    p = plain.astype(np.float64)
    c = cipher.astype(np.float64)
    hw = p.size
    diff = p - c
    mae = float(np.abs(diff).mean())
    mse = float((diff ** 2).mean())
    psnr = math.inf if mse == 0.0 else 10.0 * math.log10(255.0 ** 2 / mse)
    # spectral distortion: mean absolute difference of DFT magnitude spectra
    sd = float(np.abs(np.abs(np.fft.fft2(p)) - np.abs(np.fft.fft2(c))).mean())
    # global (single-window) SSIM with the conventional stabilizers
    c1 = (0.01 * 255.0) ** 2
    c2 = (0.03 * 255.0) ** 2
    mu_p, mu_c = p.mean(), c.mean()
    var_p = ((p - mu_p) ** 2).mean()
    var_c = ((c - mu_c) ** 2).mean()
    cov = ((p - mu_p) * (c - mu_c)).sum() / hw
    ssim = float(
        (2 * mu_p * mu_c + c1) * (2 * cov + c2)
        / ((mu_p ** 2 + mu_c ** 2 + c1) * (var_p + var_c + c2))
    )
    return mae, mse, psnr, sd, ssim


# -- differential -------------------------------------------------------------

def diff_metrics(c1, c2) -> tuple[float, float]:
    """(NPCR %, UACI %) between two same-size images."""
    c1, c2 = _check_same_shape(c1, c2)
    a = c1.astype(np.int64)
    b = c2.astype(np.int64)
    npcr = 100.0 * float(np.count_nonzero(a != b)) / a.size
    uaci = 100.0 * float(np.abs(a - b).mean()) / 255.0
    return npcr, uaci


def plaintext_sensitivity(
    plain,
    trials: int = 10,
    rng: random.Random | None = None,
    key: SecretKey | None = None,
) -> tuple[float, float]:
    """Average NPCR/UACI over trials of a one-intensity-step change at a
    random position.  A fresh random key is drawn per trial unless one is
    pinned explicitly."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    rng = rng if rng is not None else random.Random()
    arr = np.asarray(plain)
    h, w = arr.shape
    npcrs, uacis = [], []
    for _ in range(trials):
        trial_key = key if key is not None else generate_key(rng)
        sched = derive_schedule(trial_key, h, w)
        i = rng.randrange(h)
        j = rng.randrange(w)
        changed = arr.copy()
        changed[i, j] = (int(changed[i, j]) + 1) % 256
        n, u = diff_metrics(
            encrypt(arr, trial_key, sched), encrypt(changed, trial_key, sched)
        )
        npcrs.append(n)
        uacis.append(u)
    return float(np.mean(npcrs)), float(np.mean(uacis))


# -- key sensitivity ----------------------------------------------------------

KEY_COMPONENTS = ("x0", "y0", "k", "n", "k1", "k2", "k3", "k4")

_COMPONENT_RANGES = {
    "x0": (0.0, 2 * math.pi),
    "y0": (0.0, 2 * math.pi),
    "k": (18.0, math.inf),
    "k1": (18.0, math.inf),
    "k2": (18.0, math.inf),
    "k3": (18.0, math.inf),
    "k4": (18.0, math.inf),
}


def perturb_key(key: SecretKey, component: str, delta: float = 1e-14) -> SecretKey:
    """Perturb one component by delta (1 for the integer N), flipping direction
    when that would leave the valid range.  If delta is below one ulp of the
    component the perturbation is escalated to the next representable value so
    the perturbed key is always distinct."""
    if component == "n":
        n = key.n + 1 if key.n + 1 < 1000 else key.n - 1
        return key.replace(n=n)
    if component not in _COMPONENT_RANGES:
        raise ValueError(f"unknown key component {component!r}")
    lo, hi = _COMPONENT_RANGES[component]
    v = getattr(key, component)
    cand = v + delta
    if not lo < cand < hi:
        cand = v - delta
    if cand == v:
        direction = math.inf if lo < v + delta < hi else -math.inf
        cand = math.nextafter(v, direction)
    return key.replace(**{component: cand})


@dataclass(frozen=True)
class KeySensitivityResult:
    ks1: float       # % differing cipher pixels, two keys at delta apart
    ks2: float       # mean normalized intensity change, percent
    mae: float       # wrong-key decryption vs plain
    mse: float
    psnr: float


def key_sensitivity_suite(
    key: SecretKey, plain, delta: float = 1e-14
) -> dict[str, KeySensitivityResult]:
    """Perturb each key component in turn; measure cipher divergence (KS1/KS2)
    and wrong-key decryption quality (MAE/MSE/PSNR against the plain image)."""
    arr = np.asarray(plain)
    h, w = arr.shape
    sched = derive_schedule(key, h, w)
    cipher = encrypt(arr, key, sched)
    out = {}
    for comp in KEY_COMPONENTS:
        wrong = perturb_key(key, comp, delta)
        wrong_sched = derive_schedule(wrong, h, w)
        ks1, ks2 = diff_metrics(cipher, encrypt(arr, wrong, wrong_sched))
        bad = decrypt(cipher, wrong, wrong_sched)
        mae, mse, psnr, _, _ = perceptual_metrics(arr, bad)
        out[comp] = KeySensitivityResult(ks1, ks2, mae, mse, psnr)
    return out


# -- aggregate report ---------------------------------------------------------

@dataclass
class MetricsReport:
    """Every metric value for one plain/cipher pair (and its key)."""

    height: int = 0
    width: int = 0
    chi2_plain: float = 0.0
    chi2_cipher: float = 0.0
    hist_var_plain: float = 0.0
    hist_var_cipher: float = 0.0
    di: float = 0.0
    md: float = 0.0
    id: float = 0.0
    hd: int = 0
    br_plain: dict = field(default_factory=dict)
    br_cipher: dict = field(default_factory=dict)
    fpr: float = 0.0
    corr_plain_h: float | None = None
    corr_plain_v: float | None = None
    corr_cipher_h: float | None = None
    corr_cipher_v: float | None = None
    corr_2d: float | None = None
    entropy_global_plain: float = 0.0
    entropy_global_cipher: float = 0.0
    entropy_local_plain: dict = field(default_factory=dict)
    entropy_local_cipher: dict = field(default_factory=dict)
    mae: float = 0.0
    mse: float = 0.0
    psnr: float = 0.0
    sd: float = 0.0
    ssim: float = 0.0
    npcr: float | None = None
    uaci: float | None = None
    key_sensitivity: dict = field(default_factory=dict)

    def to_json(self) -> str:
        def clean(v):
            if isinstance(v, float) and not math.isfinite(v):
                return repr(v)
            if isinstance(v, dict):
                return {str(k): clean(x) for k, x in v.items()}
            return v

        return json.dumps({k: clean(v) for k, v in asdict(self).items()}, indent=2)

    def to_text(self) -> str:
        def fmt(v):
            if v is None:
                return "undefined"
            if isinstance(v, float):
                return f"{v:.6g}"
            return str(v)

        lines = [
            f"image size: {self.height} x {self.width}",
            "",
            "histogram uniformity",
            f"  chi2      plain {fmt(self.chi2_plain):>14}  cipher {fmt(self.chi2_cipher):>14}",
            f"  hist var  plain {fmt(self.hist_var_plain):>14}  cipher {fmt(self.hist_var_cipher):>14}",
            "",
            "histogram deviations (plain vs cipher)",
            f"  DI {fmt(self.di)}   MD {fmt(self.md)}   ID {fmt(self.id)}",
            "",
            "DNA sequence analysis",
            f"  hamming distance {self.hd} of {4 * self.height * self.width} bases",
            "  base ratio plain  "
            + "  ".join(f"{b} {fmt(self.br_plain.get(b))}" for b in BASES),
            "  base ratio cipher "
            + "  ".join(f"{b} {fmt(self.br_cipher.get(b))}" for b in BASES),
            f"  fixed point ratio {fmt(self.fpr)} %",
            "",
            "correlation",
            f"  plain  horizontal {fmt(self.corr_plain_h)}  vertical {fmt(self.corr_plain_v)}",
            f"  cipher horizontal {fmt(self.corr_cipher_h)}  vertical {fmt(self.corr_cipher_v)}",
            f"  2D plain-vs-cipher {fmt(self.corr_2d)}",
            "",
            "information entropy (bits)",
            f"  global  plain {fmt(self.entropy_global_plain)}  cipher {fmt(self.entropy_global_cipher)}",
        ]
        for b in sorted(self.entropy_local_plain):
            lines.append(
                f"  local {b}x{b}  plain {fmt(self.entropy_local_plain[b])}"
                f"  cipher {fmt(self.entropy_local_cipher[b])}"
            )
        lines += [
            "",
            "perceptual quality (plain vs cipher)",
            f"  MAE {fmt(self.mae)}   MSE {fmt(self.mse)}   PSNR {fmt(self.psnr)} dB",
            f"  SD {fmt(self.sd)}   SSIM {fmt(self.ssim)}",
        ]
        if self.npcr is not None:
            lines += [
                "",
                "plaintext sensitivity (averaged)",
                f"  NPCR {fmt(self.npcr)} %   UACI {fmt(self.uaci)} %",
            ]
        if self.key_sensitivity:
            lines += ["", "key sensitivity (per perturbed component)"]
            for comp, r in self.key_sensitivity.items():
                lines.append(
                    f"  {comp:>3}: KS1 {fmt(r['ks1'])} %  KS2 {fmt(r['ks2'])} %"
                    f"  wrong-key MAE {fmt(r['mae'])}  MSE {fmt(r['mse'])}"
                    f"  PSNR {fmt(r['psnr'])} dB"
                )
        return "\n".join(lines) + "\n"


def analyze_pair(
    plain,
    cipher,
    key: SecretKey,
    trials: int = 10,
    blocksizes=(25, 40, 50),
    rng: random.Random | None = None,
) -> MetricsReport:
    """Full evaluation of one plain/cipher pair.  trials=0 skips the
    plaintext- and key-sensitivity campaigns (which re-run the cipher)."""
    plain, cipher = _check_same_shape(plain, cipher)
    h, w = plain.shape
    sched = derive_schedule(key, h, w)
    rep = MetricsReport(height=h, width=w)
    rep.chi2_plain, rep.hist_var_plain = histogram_uniformity(plain)
    rep.chi2_cipher, rep.hist_var_cipher = histogram_uniformity(cipher)
    rep.di, rep.md, rep.id = deviation_metrics(plain, cipher)
    rep.hd, rep.br_plain, rep.br_cipher = dna_sequence_metrics(plain, cipher, sched)
    rep.fpr = fixed_point_ratio(plain, cipher)
    corr = correlation_metrics(plain, cipher)
    rep.corr_plain_h, rep.corr_plain_v = corr.plain_h, corr.plain_v
    rep.corr_cipher_h, rep.corr_cipher_v = corr.cipher_h, corr.cipher_v
    rep.corr_2d = corr.plain_cipher_2d
    usable = [b for b in blocksizes if h % b == 0 and w % b == 0]
    rep.entropy_global_plain, rep.entropy_local_plain = entropy_metrics(plain, usable)
    rep.entropy_global_cipher, rep.entropy_local_cipher = entropy_metrics(cipher, usable)
    rep.mae, rep.mse, rep.psnr, rep.sd, rep.ssim = perceptual_metrics(plain, cipher)
    if trials > 0:
        rep.npcr, rep.uaci = plaintext_sensitivity(plain, trials, rng, key=key)
        rep.key_sensitivity = {
            comp: asdict(res)
            for comp, res in key_sensitivity_suite(key, plain).items()
        }
    return rep
