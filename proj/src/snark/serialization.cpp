// zkoffload: verifiable computation offloading
// Copyright 2026 The zkoffload Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zkoffload/snark/serialization.hpp>

#include <json.hpp>

#include <fstream>
#include <iterator>

namespace zkoffload::snark
{
using algebra::Fq;
using algebra::Fq2;

namespace
{
constexpr uint32_t kVkMagic = 0x4b565a5a;  // "ZZVK"
constexpr uint32_t kPkMagic = 0x4b505a5a;  // "ZZPK"

class Writer
{
public:
    void u32(uint32_t v)
    {
        for (int i = 0; i < 4; ++i)
            out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
    }
    template <typename F>
    void word(const F& f)
    {
        const auto b = f.to_bytes();
        out_.insert(out_.end(), b.begin(), b.end());
    }
    void g1(const G1Affine& p)
    {
        word(p.infinity ? Fq::zero() : p.x);
        word(p.infinity ? Fq::zero() : p.y);
    }
    void g2(const G2Affine& p)
    {
        const Fq2 x = p.infinity ? Fq2::zero() : p.x;
        const Fq2 y = p.infinity ? Fq2::zero() : p.y;
        word(x.c0);
        word(x.c1);
        word(y.c0);
        word(y.c1);
    }
    template <typename T, typename Fn>
    void vec(const std::vector<T>& v, Fn fn)
    {
        u32(static_cast<uint32_t>(v.size()));
        for (const auto& e : v)
            (this->*fn)(e);
    }
    void raw(std::span<const uint8_t> b) { out_.insert(out_.end(), b.begin(), b.end()); }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class Reader
{
public:
    explicit Reader(std::span<const uint8_t> in) : in_{in} {}

    uint32_t u32()
    {
        need(4);
        uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<uint32_t>(in_[pos_ + i]) << (8 * i);
        pos_ += 4;
        return v;
    }
    template <typename F>
    F word()
    {
        need(32);
        const std::span<const uint8_t, 32> w{in_.data() + pos_, 32};
        pos_ += 32;
        try
        {
            return F::from_bytes(w);
        }
        catch (const std::exception&)
        {
            throw DecodeError("non-canonical field element");
        }
    }
    G1Affine g1()
    {
        G1Affine p;
        p.x = word<Fq>();
        p.y = word<Fq>();
        p.infinity = p.x.is_zero() && p.y.is_zero();
        return p;
    }
    G2Affine g2()
    {
        G2Affine p;
        p.x.c0 = word<Fq>();
        p.x.c1 = word<Fq>();
        p.y.c0 = word<Fq>();
        p.y.c1 = word<Fq>();
        p.infinity = p.x.is_zero() && p.y.is_zero();
        return p;
    }
    template <typename T>
    std::vector<T> vec(T (Reader::*fn)())
    {
        const uint32_t n = u32();
        if (n > remaining() / 64 + 1)
            throw DecodeError("vector length exceeds input");
        std::vector<T> out;
        out.reserve(n);
        for (uint32_t i = 0; i < n; ++i)
            out.push_back((this->*fn)());
        return out;
    }
    std::size_t remaining() const noexcept { return in_.size() - pos_; }
    void finish() const
    {
        if (pos_ != in_.size())
            throw DecodeError("trailing bytes");
    }
    void need(std::size_t n) const
    {
        if (in_.size() - pos_ < n)
            throw DecodeError("truncated input");
    }
    void raw(uint8_t* dst, std::size_t n)
    {
        need(n);
        std::copy_n(in_.data() + pos_, n, dst);
        pos_ += n;
    }

private:
    std::span<const uint8_t> in_;
    std::size_t pos_ = 0;
};

void expect_magic(Reader& r, uint32_t magic)
{
    if (r.u32() != magic)
        throw DecodeError("bad magic");
}
}  // namespace

Bytes encode_proof(const Proof& p)
{
    Writer w;
    w.u32(8);
    w.g1(p.a);
    w.g2(p.b);
    w.g1(p.c);
    return w.take();
}

Proof decode_proof(std::span<const uint8_t> bytes)
{
    Reader r{bytes};
    if (r.u32() != 8)
        throw DecodeError("proof must hold 8 words");
    Proof p;
    p.a = r.g1();
    p.b = r.g2();
    p.c = r.g1();
    r.finish();
    return p;
}

Bytes encode_verifying_key(const VerifyingKey& vk)
{
    Writer w;
    w.u32(kVkMagic);
    w.g1(vk.alpha_g1);
    w.g2(vk.beta_g2);
    w.g2(vk.gamma_g2);
    w.g2(vk.delta_g2);
    w.vec(vk.ic, &Writer::g1);
    return w.take();
}

VerifyingKey decode_verifying_key(std::span<const uint8_t> bytes)
{
    Reader r{bytes};
    expect_magic(r, kVkMagic);
    VerifyingKey vk;
    vk.alpha_g1 = r.g1();
    vk.beta_g2 = r.g2();
    vk.gamma_g2 = r.g2();
    vk.delta_g2 = r.g2();
    vk.ic = r.vec(&Reader::g1);
    if (vk.ic.empty())
        throw DecodeError("verifying key without input commitments");
    r.finish();
    return vk;
}

Bytes encode_proving_key(const ProvingKey& pk)
{
    Writer w;
    w.u32(kPkMagic);
    w.raw(pk.cs_digest);
    w.u32(static_cast<uint32_t>(pk.num_public));
    w.u32(static_cast<uint32_t>(pk.domain_size));
    w.g1(pk.alpha_g1);
    w.g1(pk.beta_g1);
    w.g2(pk.beta_g2);
    w.g1(pk.delta_g1);
    w.g2(pk.delta_g2);
    w.vec(pk.a_query, &Writer::g1);
    w.vec(pk.b_g1_query, &Writer::g1);
    w.vec(pk.b_g2_query, &Writer::g2);
    w.vec(pk.h_query, &Writer::g1);
    w.vec(pk.l_query, &Writer::g1);
    return w.take();
}

ProvingKey decode_proving_key(std::span<const uint8_t> bytes)
{
    Reader r{bytes};
    expect_magic(r, kPkMagic);
    ProvingKey pk;
    r.raw(pk.cs_digest.data(), pk.cs_digest.size());
    pk.num_public = r.u32();
    pk.domain_size = r.u32();
    pk.alpha_g1 = r.g1();
    pk.beta_g1 = r.g1();
    pk.beta_g2 = r.g2();
    pk.delta_g1 = r.g1();
    pk.delta_g2 = r.g2();
    pk.a_query = r.vec(&Reader::g1);
    pk.b_g1_query = r.vec(&Reader::g1);
    pk.b_g2_query = r.vec(&Reader::g2);
    pk.h_query = r.vec(&Reader::g1);
    pk.l_query = r.vec(&Reader::g1);
    r.finish();
    const std::size_t nv = pk.a_query.size();
    if (pk.b_g1_query.size() != nv || pk.b_g2_query.size() != nv || pk.num_public + 1 > nv ||
        pk.l_query.size() != nv - pk.num_public - 1 || pk.h_query.size() + 1 != pk.domain_size)
        throw DecodeError("inconsistent proving key lengths");
    return pk;
}

namespace
{
using nlohmann::json;

json g1_json(const G1Affine& p)
{
    const Fq x = p.infinity ? Fq::zero() : p.x;
    const Fq y = p.infinity ? Fq::zero() : p.y;
    return json::array({x.to_hex(), y.to_hex()});
}

json g2_json(const G2Affine& p)
{
    const Fq2 x = p.infinity ? Fq2::zero() : p.x;
    const Fq2 y = p.infinity ? Fq2::zero() : p.y;
    return json::array({json::array({x.c0.to_hex(), x.c1.to_hex()}), json::array({y.c0.to_hex(), y.c1.to_hex()})});
}

Fq fq_json(const json& j)
{
    return Fq::from_hex(j.get<std::string>());
}

G1Affine g1_from(const json& j)
{
    if (!j.is_array() || j.size() != 2)
        throw DecodeError("G1 point must be [x, y]");
    G1Affine p{fq_json(j[0]), fq_json(j[1]), false};
    p.infinity = p.x.is_zero() && p.y.is_zero();
    return p;
}

G2Affine g2_from(const json& j)
{
    if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2)
        throw DecodeError("G2 point must be [[x0, x1], [y0, y1]]");
    G2Affine p{{fq_json(j[0][0]), fq_json(j[0][1])}, {fq_json(j[1][0]), fq_json(j[1][1])}, false};
    p.infinity = p.x.is_zero() && p.y.is_zero();
    return p;
}
}  // namespace

std::string proof_to_json(const Proof& p)
{
    json j;
    j["a"] = g1_json(p.a);
    j["b"] = g2_json(p.b);
    j["c"] = g1_json(p.c);
    return j.dump();
}

Proof proof_from_json(const std::string& text)
{
    try
    {
        const json j = json::parse(text);
        return {g1_from(j.at("a")), g2_from(j.at("b")), g1_from(j.at("c"))};
    }
    catch (const DecodeError&)
    {
        throw;
    }
    catch (const std::exception& e)
    {
        throw DecodeError(std::string{"malformed proof json: "} + e.what());
    }
}

void write_file(const std::filesystem::path& path, std::span<const uint8_t> bytes)
{
    std::ofstream out{path, std::ios::binary | std::ios::trunc};
    if (!out)
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("write failed: " + path.string());
}

Bytes read_file(const std::filesystem::path& path)
{
    std::ifstream in{path, std::ios::binary};
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return Bytes{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
}
}  // namespace zkoffload::snark
