# Copyright 2026 The fhipe Authors.
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import random

import pytest

import fhipe


def test_fixture_inner_product():
    msk = fhipe.setup(3, 4096, seed=1)
    key = fhipe.keygen(msk, [1, 2, 3], seed=2)
    ct = fhipe.encrypt(msk, [4, 5, 6], seed=3)
    assert fhipe.decrypt(msk.pp, key, ct) == 32
    for strategy in ("naive", "shared-fe", "shared-ml-fe"):
        assert fhipe.decrypt(msk.pp, key, ct, strategy) == 32


def test_random_vectors_match_python_ints():
    rng = random.Random(7)
    msk = fhipe.setup(5, 4096)
    for _ in range(5):
        x = [rng.randint(0, 15) for _ in range(5)]
        y = [rng.randint(0, 15) for _ in range(5)]
        z = fhipe.decrypt(msk.pp, fhipe.keygen(msk, x), fhipe.encrypt(msk, y))
        assert z == sum(a * b for a, b in zip(x, y))


def test_signed_and_bottom():
    msk = fhipe.setup(2, 64, signed=True, seed=4)
    key = fhipe.keygen(msk, [-3, 2])
    assert fhipe.decrypt(msk.pp, key, fhipe.encrypt(msk, [5, 1])) == -13
    assert fhipe.decrypt(msk.pp, key, fhipe.encrypt(msk, [-20, 10])) is None


def test_serialization_round_trip():
    msk = fhipe.setup(4, 4096, seed=5)
    msk2 = fhipe.read_master_key(fhipe.write_master_key(msk))
    assert msk2.pp == msk.pp
    key_bytes = fhipe.write_function_key(msk.pp, fhipe.keygen(msk2, [1, 1, 1, 1]))
    ct_bytes = fhipe.write_ciphertext(msk.pp, fhipe.encrypt(msk, [2, 2, 2, 2]),
                                      compressed=True)
    assert len(ct_bytes) == 20 + 5 * 96
    pp, key = fhipe.read_function_key(key_bytes)
    _, ct = fhipe.read_ciphertext(ct_bytes)
    assert fhipe.decrypt(pp, key, ct) == 8


def test_errors_are_typed():
    msk = fhipe.setup(2, 100)
    with pytest.raises(fhipe.InvalidArgumentError):
        fhipe.encrypt(msk, [1, 2, 3])
    with pytest.raises(fhipe.FormatError):
        fhipe.read_ciphertext(b"nope")
    raw = bytearray(fhipe.write_master_key(msk))
    raw[40] ^= 0x01
    with pytest.raises(fhipe.Error):
        fhipe.read_master_key(bytes(raw))


def test_localization():
    config = fhipe.LocalizationConfig(n_aps=2, spread=20)
    msk = fhipe.setup(config.dimension, 841, seed=6)
    db = [[10, 10], [12, 11], [30, 30]]
    keys = [fhipe.keygen(msk, fhipe.augment_db_entry(w, config)) for w in db]
    ct = fhipe.encrypt(msk, fhipe.augment_query([12, 11], config))
    indices, distances = fhipe.nearest_neighbors(msk.pp, ct, keys, [0, 1, 2], 2)
    assert indices == [1, 0]
    assert distances == [0, 5]
    assert fhipe.quantize_rssi(-100.0, config) == 0


def test_classifier():
    msk = fhipe.setup(2, 2 * 2047 * 63 + 1, signed=True, seed=8)
    key = fhipe.keygen(msk, [3, -2])
    ct = fhipe.encrypt(msk, [2, 1])
    assert fhipe.classify_encrypted(msk.pp, key, ct, 4) == "C0"
    assert fhipe.classify_encrypted(msk.pp, key, ct, 3) == "C1"
    assert fhipe.classify_plain([3, -2], [2, 1], 4) == "C0"
