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
"""Function-hiding inner product encryption over BLS12-381."""

from ._fhipe import (
    Ciphertext,
    Error,
    FormatError,
    FunctionKey,
    IntegrityError,
    InvalidArgumentError,
    IoError,
    LocalizationConfig,
    MasterSecretKey,
    PointDecodeError,
    PublicParams,
    RngFailureError,
    SingularMatrixError,
    augment_db_entry,
    augment_query,
    classify_encrypted,
    classify_plain,
    decrypt,
    encrypt,
    keygen,
    nearest_neighbors,
    quantize_rssi,
    read_ciphertext,
    read_function_key,
    read_master_key,
    setup,
    write_ciphertext,
    write_function_key,
    write_master_key,
)

__all__ = [name for name in dir() if not name.startswith("_")]
