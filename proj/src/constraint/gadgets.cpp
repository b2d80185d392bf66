// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/constraint/gadgets.hpp>
#include <zkoffload/constraint/mimc.hpp>

#include <bit>
#include <stdexcept>

namespace zkoffload::constraint::gadgets
{
namespace
{
LC sum_of(std::span<const Variable> vars)
{
    LC acc;
    for (const auto& v : vars)
        acc += LC{v};
    return acc;
}

// Allocates `count` private booleans.
std::vector<Variable> alloc_booleans(CircuitBuilder& b, std::size_t count)
{
    std::vector<Variable> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        out.push_back(b.alloc_private());
        boolean(b, out.back());
    }
    return out;
}

// Small non-negative integer held by a field element, or nullopt.
std::optional<uint64_t> small_value(const Fr& v)
{
    if (!v.fits_u64())
        return std::nullopt;
    return v.low_u64();
}
}  // namespace

void boolean(CircuitBuilder& b, const LC& x)
{
    b.enforce(x, x - LC::constant(1), LC{});
}

void equal(CircuitBuilder& b, const LC& x, const LC& y)
{
    b.enforce(x - y, LC::constant(1), LC{});
}

LC lookup_combination(std::span<const Fr> table, std::span<const Variable> selectors)
{
    if (table.size() != selectors.size())
        throw std::invalid_argument("lookup: table/selector length mismatch");
    LC acc;
    for (std::size_t i = 0; i < table.size(); ++i)
        acc += LC{selectors[i]} * table[i];
    return acc;
}

Variable indexed_lookup(CircuitBuilder& b, std::span<const Fr> table, std::span<const Variable> selectors)
{
    if (table.size() != selectors.size())
        throw std::invalid_argument("indexed_lookup: table/selector length mismatch");
    if (table.empty())
        throw std::invalid_argument("indexed_lookup: empty table");
    for (const auto& s : selectors)
        boolean(b, s);
    equal(b, sum_of(selectors), LC::constant(1));

    const LC selected = lookup_combination(table, selectors);
    const Variable out = b.alloc_private();
    equal(b, out, selected);
    b.add_generator([selected, out](Assignment& z) { z[out.index] = selected.evaluate(z); });
    return out;
}

std::vector<Variable> one_hot(CircuitBuilder& b, const LC& value, std::size_t domain)
{
    if (domain == 0)
        throw std::invalid_argument("one_hot: empty domain");
    std::vector<Variable> sel = alloc_booleans(b, domain);
    equal(b, sum_of(sel), LC::constant(1));
    LC weighted;
    for (std::size_t i = 1; i < domain; ++i)
        weighted += LC{sel[i]} * Fr{i};
    equal(b, weighted, value);

    b.add_generator([sel, value](Assignment& z) {
        for (const auto& s : sel)
            z[s.index] = Fr::zero();
        const auto v = small_value(value.evaluate(z));
        if (v && *v < sel.size())
            z[sel[*v].index] = Fr::one();
    });
    return sel;
}

void permutation_check(CircuitBuilder& b, std::span<const Variable> path, std::span<const Variable> cities)
{
    if (path.size() != cities.size())
        throw std::invalid_argument("permutation_check: path/cities length mismatch");
    const std::size_t n = path.size();

    // selector[i][j] = 1 iff path slot i takes city slot j
    std::vector<Variable> selector;
    std::vector<Variable> product;
    selector.reserve(n * n);
    product.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
    {
        LC row_sum;
        LC picked;
        for (std::size_t j = 0; j < n; ++j)
        {
            const Variable s = b.alloc_private();
            boolean(b, s);
            const Variable p = b.alloc_private();
            b.enforce(s, cities[j], p);
            selector.push_back(s);
            product.push_back(p);
            row_sum += LC{s};
            picked += LC{p};
        }
        equal(b, row_sum, LC::constant(1));
        equal(b, picked, path[i]);
    }
    for (std::size_t j = 0; j < n; ++j)
    {
        LC col_sum;
        for (std::size_t i = 0; i < n; ++i)
            col_sum += LC{selector[i * n + j]};
        equal(b, col_sum, LC::constant(1));
    }

    b.add_generator([n, selector, product, path = std::vector<Variable>(path.begin(), path.end()),
                     cities = std::vector<Variable>(cities.begin(), cities.end())](Assignment& z) {
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n; ++i)
        {
            bool matched = false;
            for (std::size_t j = 0; j < n; ++j)
            {
                const bool take = !matched && !used[j] && z[cities[j].index] == z[path[i].index];
                if (take)
                {
                    used[j] = true;
                    matched = true;
                }
                z[selector[i * n + j].index] = take ? Fr::one() : Fr::zero();
                z[product[i * n + j].index] = take ? z[cities[j].index] : Fr::zero();
            }
        }
    });
}

void path_sum(CircuitBuilder& b,
              std::span<const Variable> path,
              std::shared_ptr<const SquareTable> distances,
              Variable out_sum)
{
    const std::size_t slots = path.size();
    const std::size_t dim = distances->dim;
    if (slots == 0)
        throw std::invalid_argument("path_sum: empty path");
    if (dim < 2)
        throw std::invalid_argument("path_sum: distance table too small");

    std::vector<std::vector<Variable>> hot;
    hot.reserve(slots);
    for (const auto& p : path)
        hot.push_back(one_hot(b, p, dim));

    // A sentinel slot may only be followed by another sentinel slot.
    for (std::size_t i = 0; i + 1 < slots; ++i)
        b.enforce(hot[i][0], LC::constant(1) - LC{hot[i + 1][0]}, LC{});

    // Row `row` of the distance table applied to the one-hot vector `to`.
    std::vector<Fr> row_buf(dim);
    auto row_lookup = [&](std::size_t row, const std::vector<Variable>& to) {
        for (std::size_t c = 0; c < dim; ++c)
            row_buf[c] = distances->at(row, c);
        return lookup_combination(row_buf, to);
    };

    struct EdgeTerm
    {
        Variable product;
        Variable from;
        LC to_row;
    };
    std::vector<EdgeTerm> terms;
    LC total;
    auto add_edge = [&](const std::vector<Variable>& from, const std::vector<Variable>& to) {
        for (std::size_t c = 1; c < dim; ++c)
        {
            LC row = row_lookup(c, to);
            const Variable prod = b.alloc_private();
            b.enforce(from[c], row, prod);
            total += LC{prod};
            terms.push_back({prod, from[c], std::move(row)});
        }
    };

    for (std::size_t i = 0; i + 1 < slots; ++i)
        add_edge(hot[i], hot[i + 1]);

    // last_i = nz_i - nz_{i+1} with nz_i = 1 - hot[i][0]; it marks the final non-sentinel slot.
    LC last_value;
    std::vector<std::pair<LC, Variable>> last_terms;
    for (std::size_t i = 0; i < slots; ++i)
    {
        const LC next_sentinel = i + 1 < slots ? LC{hot[i + 1][0]} : LC::constant(1);
        const LC is_last = next_sentinel - LC{hot[i][0]};
        const Variable m = b.alloc_private();
        b.enforce(is_last, path[i], m);
        last_value += LC{m};
        last_terms.emplace_back(is_last, m);
    }
    b.add_generator([last_terms = std::move(last_terms), path = std::vector<Variable>(path.begin(), path.end())](
                        Assignment& z) {
        for (std::size_t i = 0; i < last_terms.size(); ++i)
            z[last_terms[i].second.index] = last_terms[i].first.evaluate(z) * z[path[i].index];
    });
    const auto last_hot = one_hot(b, last_value, dim);
    add_edge(last_hot, hot[0]);

    equal(b, total, out_sum);

    b.add_generator([terms = std::move(terms)](Assignment& z) {
        for (const auto& t : terms)
        {
            const Fr& from = z[t.from.index];
            z[t.product.index] = from.is_zero() ? Fr::zero() : from * t.to_row.evaluate(z);
        }
    });
}

HashDigestVars hash(CircuitBuilder& b, std::span<const LC> inputs)
{
    if (inputs.empty())
        throw std::invalid_argument("hash gadget: empty input");
    const auto& rc = mimc::round_constants();

    struct Round
    {
        Variable square;
        Variable next_left;
    };
    std::vector<Round> rounds;
    rounds.reserve((inputs.size() + 1) * mimc::kRounds);

    LC left;
    LC right;
    auto permute = [&] {
        for (std::size_t i = 0; i < mimc::kRounds; ++i)
        {
            const LC t = left + LC::constant(rc[i]);
            const Variable sq = b.alloc_private();
            b.enforce(t, t, sq);
            const Variable next = b.alloc_private();
            b.enforce(sq, t, LC{next} - right);
            rounds.push_back({sq, next});
            right = std::move(left);
            left = LC{next};
        }
    };
    for (const auto& x : inputs)
    {
        left += x;
        permute();
    }
    const Variable limb0 = rounds.back().next_left;
    permute();
    const Variable limb1 = rounds.back().next_left;

    b.add_generator([rounds = std::move(rounds), inputs = std::vector<LC>(inputs.begin(), inputs.end())](
                        Assignment& z) {
        const auto& c = mimc::round_constants();
        mimc::State s;
        std::size_t r = 0;
        auto permute_values = [&] {
            for (std::size_t i = 0; i < mimc::kRounds; ++i, ++r)
            {
                const Fr t = s.left + c[i];
                const Fr sq = t.squared();
                const Fr next = s.right + sq * t;
                z[rounds[r].square.index] = sq;
                z[rounds[r].next_left.index] = next;
                s.right = s.left;
                s.left = next;
            }
        };
        for (const auto& x : inputs)
        {
            s.left += x.evaluate(z);
            permute_values();
        }
        permute_values();
    });
    return {limb0, limb1};
}

void range_check(CircuitBuilder& b, const LC& x, uint64_t bound)
{
    const auto width = static_cast<std::size_t>(std::bit_width(bound));
    if (width == 0)
    {
        equal(b, x, LC{});
        return;
    }
    const std::vector<Variable> low = alloc_booleans(b, width);
    const std::vector<Variable> slack = alloc_booleans(b, width);
    LC low_sum;
    LC slack_sum;
    Fr pow2 = Fr::one();
    for (std::size_t i = 0; i < width; ++i)
    {
        low_sum += LC{low[i]} * pow2;
        slack_sum += LC{slack[i]} * pow2;
        pow2 = pow2.doubled();
    }
    equal(b, low_sum, x);
    equal(b, slack_sum, LC::constant(bound) - x);

    b.add_generator([low, slack, x, bound](Assignment& z) {
        const auto v = small_value(x.evaluate(z));
        // Out-of-range values get bits that violate the decomposition rows.
        const uint64_t xv = v.value_or(0);
        const uint64_t sv = (v && *v <= bound) ? bound - *v : 0;
        for (std::size_t i = 0; i < low.size(); ++i)
        {
            z[low[i].index] = ((xv >> i) & 1) != 0 ? Fr::one() : Fr::zero();
            z[slack[i].index] = ((sv >> i) & 1) != 0 ? Fr::one() : Fr::zero();
        }
    });
}
}  // namespace zkoffload::constraint::gadgets
