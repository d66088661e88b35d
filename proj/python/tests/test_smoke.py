import cmath
import json
import math

import numpy as np
import pytest

import oulpsim


def test_design_meets_the_residual_bound():
    f = oulpsim.design_iota(32)
    assert f.L == 32
    assert f.support == 5 * 32 + 1
    assert f.residual() <= 1e-8
    c = np.array(f.coeffs)
    assert np.allclose(c, c[::-1])
    assert abs(np.sum(c**2) - 1.0) < 1e-12


def test_short_overlap_is_rejected():
    with pytest.raises(oulpsim.DesignError):
        oulpsim.design_iota(32, overlap=4)


def test_xi_matches_direct_inner_product():
    L = 16
    f = oulpsim.design_iota(L)
    c = np.array(f.coeffs)
    h = len(c) // 2
    m = np.arange(-h - 2 * L, h + 2 * L + 1)

    def basis(k, l):
        idx = m - k * L // 2 + h
        g = np.where((idx >= 0) & (idx < len(c)), c[np.clip(idx, 0, len(c) - 1)], 0.0)
        return g * np.exp(2j * np.pi * l * m / L) * np.exp(1j * np.pi * (l + k) / 2)

    for kp in (2, 3):
        for kappa in (-1, 0, 1):
            for ell in (-2, 0, 1, 3):
                direct = np.sum(basis(kp - kappa, 5 - ell) * np.conj(basis(kp, 5)))
                got = oulpsim.xi_coefficient(f, kappa, ell, "even" if kp % 2 == 0 else "odd")
                assert abs(direct - got) < 1e-12


def test_gain_vector_is_the_scaled_inverse_transform_of_xi():
    L = 32
    f = oulpsim.design_iota(L)
    row = np.array(oulpsim.xi_row(f, 0, "even"))
    col = np.zeros(L, dtype=complex)
    col[0], col[1], col[-1] = row[0], row[1], row[-1]
    v = np.array(oulpsim.gain_vector(f, 0, "even", 1))
    assert np.allclose(v, L * np.fft.ifft(col), atol=1e-12)


def test_flat_noiseless_loopback():
    L = 32
    t = oulpsim.Transceiver(oulpsim.design_iota(L))
    rng = np.random.default_rng(4)
    C = np.array(oulpsim.qam16_constellation())
    K = 12
    Q = C[rng.integers(0, 16, size=(K, L // 2))]
    x = t.transmit(Q.tolist())
    k = K // 2
    chi = np.array(t.receive_slot(t.analyze(x, k), [1.0], 0.0, k))
    evm = np.sum(np.abs(chi / t.tx_gain - Q[k]) ** 2) / np.sum(np.abs(Q[k]) ** 2)
    assert 10 * math.log10(evm) < -20


def test_qam_round_trip():
    bits = [int(b) for b in np.random.default_rng(1).integers(0, 2, 64)]
    assert oulpsim.qam16_demap(oulpsim.qam16_map(bits)) == bits
    e = np.mean(np.abs(np.array(oulpsim.qam16_constellation())) ** 2)
    assert abs(e - 1.0) < 1e-12


def test_config_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config key"):
        oulpsim.check_config('{"Lx": 4}')


def test_small_sweep_is_deterministic():
    cfg = {
        "system": "oulp", "L": 32, "frame_slots": 8, "ebn0_db": [5, 15],
        "tco_s": [1e-3], "max_bits": 8192, "target_errors": 50, "seed": 3,
    }
    a = oulpsim.ber_sweep(cfg)
    b = oulpsim.ber_sweep(json.dumps(cfg))
    assert [p["errors"] for p in a["points"]] == [p["errors"] for p in b["points"]]
    assert a["csv"].splitlines()[0] == "system,L,Nt,Nr,ebn0_db,tco_s,bits,errors,ber,seconds"
    lo, hi = a["points"]
    assert lo["bits"] >= 8192 and hi["ber"] <= lo["ber"]


def test_noise_probe_center_is_one():
    emp, ana = oulpsim.noise_probe(oulpsim.design_iota(32), 1, 10000, 2)
    assert emp[0] == pytest.approx(1.0)
    assert ana[0] == pytest.approx(1.0)
    assert max(emp[1:]) < 0.3
