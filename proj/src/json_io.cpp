/*
 *   Copyright 2026 The heisrb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "heisrb/json_io.hpp"

#include "heisrb/error.hpp"

namespace heisrb::io {

namespace {

const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("expected an object with field \"") + key + "\", got " + j.dump());
    return j.at(key);
}

void expect_array(const json &j, std::size_t size, const char *what)
{
    if (!j.is_array() || j.size() != size)
        throw InputError(std::string("expected ") + what + " (array of " + std::to_string(size) + "), got " + j.dump());
}

} // namespace

json encode(const Scalar &s) { return s.to_string(); }
json encode(const GaussianRational &s) { return s.to_string(); }

json encode(const AlgebraElement &x) { return {{"a", encode(x.a)}, {"b", encode(x.b)}, {"c", encode(x.c)}}; }

json encode(const GroupElement &g)
{
    return {{"kind", "group"}, {"a", encode(g.a)}, {"b", encode(g.b)}, {"c", encode(g.c)}};
}

json encode(const OperatorMatrix &R)
{
    json rows = json::array();
    for (int i = 1; i <= 3; ++i)
        rows.push_back({encode(R.r(i, 1)), encode(R.r(i, 2)), encode(R.r(i, 3))});
    return {{"r", rows}};
}

json encode(const FamilyTag &tag)
{
    json params = json::object();
    for (const auto &[name, value] : tag.params)
        params[name] = encode(value);
    json excluded = json::array();
    for (const auto &e : tag.excluded)
        excluded.push_back(encode(e));
    return {{"family", std::string(to_string(tag.family))}, {"params", params}, {"excluded", excluded}};
}

json encode(const AlgebraAutomorphism &psi)
{
    return {{"m",
             {{encode(psi.m11()), encode(psi.m12()), encode(psi.m13())},
              {encode(psi.m21()), encode(psi.m22()), encode(psi.m23())}}}};
}

json encode(const SemiAlgebraElement &u)
{
    return {{"space", "semi-alg"}, {"first", encode(u.first)}, {"second", encode(u.second)}};
}

json encode(const SemiGroupElement &u)
{
    return {{"space", "semi-grp"}, {"first", encode(u.first)}, {"second", encode(u.second)}};
}

json encode(const JordanForm &j)
{
    json form = json::array();
    json basis = json::array();
    for (int i = 0; i < 2; ++i) {
        form.push_back({encode(j.form[i][0]), encode(j.form[i][1])});
        basis.push_back({encode(j.basis[i][0]), encode(j.basis[i][1])});
    }
    return {{"note", std::string(to_string(j.note))},
            {"eigenvalues", {encode(j.eigenvalues[0]), encode(j.eigenvalues[1])}},
            {"form", form},
            {"basis", basis}};
}

json encode(const Classification &c)
{
    json out{{"r_family", encode(c.r_family)}};
    out["p_family"] = c.p_family ? encode(*c.p_family) : json(nullptr);
    out["jordan"] = c.jordan ? encode(*c.jordan) : json(nullptr);
    out["to_canonical"] = c.to_canonical ? encode(*c.to_canonical) : json(nullptr);
    if (!c.p_family_error.empty())
        out["p_family_error"] = c.p_family_error;
    return out;
}

json encode(const TransferReport &report)
{
    json witness = nullptr;
    if (report.witness) {
        witness = json::array();
        for (const auto &d : *report.witness)
            witness.push_back(encode(d));
    }
    return {{"transfers", report.transfers},
            {"witness", witness},
            {"operator", encode(report.op)},
            {"automorphism", encode(report.automorphism)},
            {"conjugated", encode(report.conjugated)}};
}

// ---------------------------------------------------------------------------

Scalar decode_scalar(const json &j)
{
    if (j.is_string())
        return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Scalar(j.get<std::int64_t>());
    throw InputError("expected a scalar string or integer, got " + j.dump());
}

AlgebraElement decode_algebra(const json &j)
{
    if (j.contains("kind") && j.at("kind") != "algebra")
        throw InputError("expected an algebra element, got kind " + j.at("kind").dump());
    return {decode_scalar(field(j, "a")), decode_scalar(field(j, "b")), decode_scalar(field(j, "c"))};
}

GroupElement decode_group(const json &j)
{
    if (field(j, "kind") != "group")
        throw InputError("expected kind \"group\", got " + j.at("kind").dump());
    return {decode_scalar(field(j, "a")), decode_scalar(field(j, "b")), decode_scalar(field(j, "c"))};
}

OperatorMatrix decode_operator(const json &j)
{
    if (j.is_object() && j.contains("family"))
        return make_family(decode_family(j));
    const json &rows = j.is_object() ? field(j, "r") : j;
    expect_array(rows, 3, "3x3 matrix");
    OperatorMatrix R;
    for (int i = 0; i < 3; ++i) {
        expect_array(rows[i], 3, "matrix row");
        for (int k = 0; k < 3; ++k)
            R.r(i + 1, k + 1) = decode_scalar(rows[i][k]);
    }
    return R;
}

FamilyTag decode_family(const json &j)
{
    const json &name = field(j, "family");
    if (!name.is_string())
        throw InputError("family must be a string, got " + name.dump());
    std::map<std::string, Scalar> params;
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw InputError("params must be an object, got " + j.at("params").dump());
        for (const auto &[key, value] : j.at("params").items())
            params.emplace(key, decode_scalar(value));
    }
    return complete_family(family_from_string(name.get<std::string>()), std::move(params));
}

AlgebraAutomorphism decode_automorphism(const json &j)
{
    const json &rows = j.is_object() ? field(j, "m") : j;
    expect_array(rows, 2, "2x3 automorphism rows");
    expect_array(rows[0], 3, "automorphism row");
    expect_array(rows[1], 3, "automorphism row");
    auto m = [&](int i, int k) { return decode_scalar(rows[i][k]); };
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1), m(0, 2), m(1, 2)};
}

SemiAlgebraElement decode_semi_algebra(const json &j)
{
    if (field(j, "space") != "semi-alg")
        throw InputError("expected space \"semi-alg\", got " + j.at("space").dump());
    return {decode_algebra(field(j, "first")), decode_algebra(field(j, "second"))};
}

SemiGroupElement decode_semi_group(const json &j)
{
    if (field(j, "space") != "semi-grp")
        throw InputError("expected space \"semi-grp\", got " + j.at("space").dump());
    return {decode_group(field(j, "first")), decode_group(field(j, "second"))};
}

json parse(const std::string &text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace heisrb::io
