// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/algebra/field.hpp>

#include <algorithm>

namespace zkoffload::algebra::limbs
{
std::string to_hex(const Limbs& a)
{
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out = "0x";
    bool leading = true;
    for (int i = 63; i >= 0; --i)
    {
        const auto nibble = static_cast<unsigned>((a[static_cast<std::size_t>(i) / 16] >> (4 * (i % 16))) & 0xf);
        if (leading && nibble == 0 && i != 0)
            continue;
        leading = false;
        out.push_back(kDigits[nibble]);
    }
    return out;
}

Limbs from_hex(std::string_view s)
{
    if (s.starts_with("0x") || s.starts_with("0X"))
        s.remove_prefix(2);
    if (s.empty() || s.size() > 64)
        throw std::invalid_argument("bad hex field literal");
    Limbs r{};
    std::size_t pos = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it, ++pos)
    {
        const char ch = *it;
        uint64_t v = 0;
        if (ch >= '0' && ch <= '9')
            v = static_cast<uint64_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            v = static_cast<uint64_t>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F')
            v = static_cast<uint64_t>(ch - 'A' + 10);
        else
            throw std::invalid_argument("bad hex digit");
        r[pos / 16] |= v << (4 * (pos % 16));
    }
    return r;
}

std::string to_decimal(Limbs a)
{
    if (is_zero(a))
        return "0";
    std::string out;
    while (!is_zero(a))
        out.push_back(static_cast<char>('0' + div_small(a, 10)));
    std::reverse(out.begin(), out.end());
    return out;
}
}  // namespace zkoffload::algebra::limbs
