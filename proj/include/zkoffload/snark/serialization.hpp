// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <zkoffload/snark/groth16.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace zkoffload::snark
{
using Bytes = std::vector<uint8_t>;

class DecodeError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Encoded proofs are a u32 word count followed by 8 little-endian 32-byte words:
/// a.x a.y b.x.c0 b.x.c1 b.y.c0 b.y.c1 c.x c.y. The identity is encoded as all-zero coordinates.
inline constexpr std::size_t kProofBytes = 4 + 8 * 32;

Bytes encode_proof(const Proof& p);
Proof decode_proof(std::span<const uint8_t> bytes);

Bytes encode_verifying_key(const VerifyingKey& vk);
VerifyingKey decode_verifying_key(std::span<const uint8_t> bytes);

Bytes encode_proving_key(const ProvingKey& pk);
ProvingKey decode_proving_key(std::span<const uint8_t> bytes);

/// {"a":[x,y],"b":[[x0,x1],[y0,y1]],"c":[x,y]} with 0x-prefixed hex coordinates, on one line.
std::string proof_to_json(const Proof& p);
Proof proof_from_json(const std::string& text);

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes);
Bytes read_file(const std::filesystem::path& path);

}  // namespace zkoffload::snark
