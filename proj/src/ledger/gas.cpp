// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/ledger/gas.hpp>

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <utility>

namespace zkoffload::ledger
{
namespace
{
template <typename Fn>
void for_each_field(GasSchedule& s, Fn&& fn)
{
    fn("tx_base", s.tx_base);
    fn("calldata_word", s.calldata_word);
    fn("storage_write_word", s.storage_write_word);
    fn("storage_read_word", s.storage_read_word);
    fn("arith_step", s.arith_step);
    fn("onchain_steps_per_city", s.onchain_steps_per_city);
    fn("hash_round", s.hash_round);
    fn("call_base", s.call_base);
    fn("verify_base", s.verify_base);
    fn("pairing", s.pairing);
    fn("public_input", s.public_input);
    fn("transfer", s.transfer);
}
}  // namespace

GasSchedule GasSchedule::from_json(const std::string& text)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::exception& e)
    {
        throw std::invalid_argument(std::string{"malformed gas schedule: "} + e.what());
    }
    if (!j.is_object())
        throw std::invalid_argument("gas schedule must be a JSON object");
    GasSchedule s;
    std::size_t known = 0;
    for_each_field(s, [&](const char* name, uint64_t& field) {
        if (!j.contains(name))
            return;
        if (!j[name].is_number_unsigned())
            throw std::invalid_argument(std::string{"gas constant "} + name + " must be a non-negative integer");
        field = j[name].get<uint64_t>();
        ++known;
    });
    if (known != j.size())
        throw std::invalid_argument("gas schedule has unknown keys");
    return s;
}

GasSchedule GasSchedule::load(const std::filesystem::path& path)
{
    std::ifstream in{path};
    if (!in)
        throw std::invalid_argument("cannot open gas schedule " + path.string());
    std::string text{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    return from_json(text);
}

std::string GasSchedule::to_json() const
{
    nlohmann::ordered_json j;
    GasSchedule copy = *this;
    for_each_field(copy, [&](const char* name, uint64_t& field) { j[name] = field; });
    return j.dump(2);
}
}  // namespace zkoffload::ledger
