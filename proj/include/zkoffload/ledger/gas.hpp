// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace zkoffload::ledger
{
/// Named cost constants. Calibrated once and fixed; not EVM gas.
struct GasSchedule
{
    uint64_t tx_base = 21000;
    uint64_t calldata_word = 512;
    uint64_t storage_write_word = 5000;
    uint64_t storage_read_word = 2100;
    uint64_t arith_step = 8;
    uint64_t onchain_steps_per_city = 500;
    uint64_t hash_round = 20;
    uint64_t call_base = 2600;
    uint64_t verify_base = 45000;
    uint64_t pairing = 25000;
    uint64_t public_input = 6150;
    uint64_t transfer = 9000;

    bool operator==(const GasSchedule&) const = default;

    /// Missing keys keep their defaults; unknown keys throw std::invalid_argument.
    static GasSchedule from_json(const std::string& text);
    static GasSchedule load(const std::filesystem::path& path);
    std::string to_json() const;
};

class GasMeter
{
public:
    explicit GasMeter(const GasSchedule& s) noexcept : schedule_{s} {}

    void charge(uint64_t amount) noexcept { used_ += amount; }
    uint64_t used() const noexcept { return used_; }
    const GasSchedule& schedule() const noexcept { return schedule_; }

private:
    const GasSchedule& schedule_;
    uint64_t used_ = 0;
};

}  // namespace zkoffload::ledger
