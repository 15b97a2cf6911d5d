/* Copyright 2026 The tropseq Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "tropseq/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace tropseq {

namespace {

std::string describe_step(const Step& step) {
    std::string out;
    for (std::size_t a = 0; a < step.size(); ++a) {
        if (a) out += '.';
        out += std::to_string(step[a]);
    }
    return out;
}

std::vector<int> split_ints(const std::string& text, char sep) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep)) {
        if (token.empty()) throw InputError("empty index in step '" + text + "'");
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw InputError("not an integer: '" + token + "'");
        }
        if (used != token.size()) throw InputError("not an integer: '" + token + "'");
        out.push_back(value);
    }
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

const Step& IteratedSequence::step_at_level(int level) const {
    if (level <= k_ || level > n_) throw std::out_of_range("no step at level " + std::to_string(level));
    return steps_[static_cast<std::size_t>(n_ - level)];
}

IteratedSequence IteratedSequence::truncated() const {
    if (n_ <= k_ + 1) throw std::logic_error("cannot truncate a base sequence");
    return build_iterated_sequence(k_, n_ - 1, std::vector<Step>(steps_.begin() + 1, steps_.end()));
}

std::string IteratedSequence::steps_string() const {
    std::string out;
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        if (s) out += ';';
        out += describe_step(steps_[s]);
    }
    return out;
}

std::string IteratedSequence::to_string() const {
    return "k=" + std::to_string(k_) + " n=" + std::to_string(n_) + " steps=" + steps_string();
}

IteratedSequence build_iterated_sequence(int k, int n, std::vector<Step> steps) {
    if (k < 1 || n <= k) {
        throw InputError("need n > k >= 1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    if (steps.size() != static_cast<std::size_t>(n - k)) {
        throw InputError("expected " + std::to_string(n - k) + " steps for k=" + std::to_string(k) +
                         " n=" + std::to_string(n) + ", got " + std::to_string(steps.size()));
    }
    IteratedSequence seq;
    seq.k_ = k;
    seq.n_ = n;
    seq.roots_.reserve(static_cast<std::size_t>(k * (n - k)));
    for (int level = n; level > k; --level) {
        const Step& step = steps[static_cast<std::size_t>(n - level)];
        if (step.size() != static_cast<std::size_t>(k)) {
            throw InputError("step at level " + std::to_string(level) + " must have " +
                             std::to_string(k) + " indices");
        }
        std::vector<bool> seen(static_cast<std::size_t>(level), false);
        for (int idx : step) {
            if (idx < 1 || idx >= level) {
                throw InputError("index " + std::to_string(idx) + " outside [1," +
                                 std::to_string(level - 1) + "] at level " + std::to_string(level));
            }
            if (seen[static_cast<std::size_t>(idx)]) {
                throw InputError("repeated index " + std::to_string(idx) + " at level " +
                                 std::to_string(level));
            }
            seen[static_cast<std::size_t>(idx)] = true;
            seq.roots_.push_back(PositiveRoot{idx, level});
        }
        // At level k+1 the indices lie in [k] and are distinct, so the step is
        // automatically a permutation of [k].
    }
    seq.steps_ = std::move(steps);
    return seq;
}

IteratedSequence parse_steps(int k, int n, const std::string& text) {
    std::vector<Step> steps;
    std::string body = trim(text);
    if (body.empty()) throw InputError("empty step list");
    std::string token;
    std::istringstream in(body);
    while (std::getline(in, token, ';')) steps.push_back(split_ints(trim(token), '.'));
    if (n <= 0) n = k + static_cast<int>(steps.size());
    return build_iterated_sequence(k, n, std::move(steps));
}

IteratedSequence parse_sequence(const std::string& raw) {
    const std::string text = trim(raw);
    if (!text.empty() && text.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("bad sequence JSON: ") + e.what());
        }
        try {
            const int k = j.value("k", 2);
            const int n = j.at("n").get<int>();
            auto steps = j.at("steps").get<std::vector<Step>>();
            return build_iterated_sequence(k, n, std::move(steps));
        } catch (const nlohmann::json::exception& e) {
            throw InputError(std::string("bad sequence JSON: ") + e.what());
        }
    }
    int k = 2, n = 0;
    std::string steps;
    std::istringstream in(text);
    std::string field;
    while (in >> field) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw InputError("expected key=value, got '" + field + "'");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        try {
            if (key == "k") {
                k = std::stoi(value);
            } else if (key == "n") {
                n = std::stoi(value);
            } else if (key == "steps") {
                steps = value;
            } else {
                throw InputError("unknown key '" + key + "'");
            }
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const InputError*>(&e)) throw;
            throw InputError("bad value for '" + key + "': " + value);
        }
    }
    if (steps.empty()) throw InputError("sequence text has no steps=");
    return parse_steps(k, n, steps);
}

std::string sequence_to_json(const IteratedSequence& seq) {
    nlohmann::json j;
    j["k"] = seq.k();
    j["n"] = seq.n();
    j["steps"] = seq.steps();
    return j.dump();
}

// Order ---------------------------------------------------------------------

PsiOrder::PsiOrder(const IteratedSequence& seq) {
    heights_.reserve(seq.roots().size());
    for (const auto& r : seq.roots()) heights_.push_back(r.height());
}

std::int64_t PsiOrder::weight(std::span<const int> m) const {
    if (m.size() != heights_.size()) {
        throw InputError("exponent vector has length " + std::to_string(m.size()) + ", expected " +
                         std::to_string(heights_.size()));
    }
    std::int64_t w = 0;
    for (std::size_t t = 0; t < m.size(); ++t) w += static_cast<std::int64_t>(m[t]) * heights_[t];
    return w;
}

std::strong_ordering PsiOrder::compare(std::span<const int> a, std::span<const int> b) const {
    const auto wa = weight(a);
    const auto wb = weight(b);
    if (wa != wb) return wa <=> wb;
    // Lex reversal: the lexicographically larger vector is the smaller one.
    for (std::size_t t = 0; t < a.size(); ++t) {
        if (a[t] != b[t]) return b[t] <=> a[t];
    }
    return std::strong_ordering::equal;
}

std::int64_t psi_weight(std::span<const int> m, const IteratedSequence& seq) {
    return PsiOrder(seq).weight(m);
}

std::strong_ordering psi_compare(std::span<const int> a, std::span<const int> b,
                                 const IteratedSequence& seq) {
    PsiOrder order(seq);
    if (a.size() != b.size()) throw InputError("exponent vectors differ in length");
    return order.compare(a, b);
}

// Enumeration ---------------------------------------------------------------

namespace {

// Ordered pairs (i, j) of distinct elements of [l-1], in lexicographic order.
std::vector<Step> ordered_pairs(int level) {
    std::vector<Step> out;
    for (int i = 1; i < level; ++i)
        for (int j = 1; j < level; ++j)
            if (i != j) out.push_back({i, j});
    return out;
}

void require_enumerable(int n) {
    if (n < 3) throw InputError("enumeration needs n >= 3");
    if (n > 12) throw InputError("enumeration beyond n=12 is not supported");
}

}  // namespace

std::uint64_t count_iterated_sequences(int n) {
    require_enumerable(n);
    std::uint64_t total = 1;
    for (int l = 3; l <= n; ++l) total *= static_cast<std::uint64_t>((l - 1) * (l - 2));
    return total;
}

IteratedSequence iterated_sequence_at(int n, std::uint64_t index) {
    if (index >= count_iterated_sequences(n)) throw InputError("sequence index out of range");
    std::vector<Step> steps(static_cast<std::size_t>(n - 2));
    // Level 3 is the least significant digit.
    for (int l = 3; l <= n; ++l) {
        const auto radix = static_cast<std::uint64_t>((l - 1) * (l - 2));
        const auto digit = static_cast<int>(index % radix);
        index /= radix;
        const int i = digit / (l - 2) + 1;
        int j = digit % (l - 2) + 1;
        if (j >= i) ++j;
        steps[static_cast<std::size_t>(n - l)] = {i, j};
    }
    return build_iterated_sequence(2, n, std::move(steps));
}

void for_each_iterated_sequence(int n, const std::function<void(const IteratedSequence&)>& visit) {
    require_enumerable(n);
    std::vector<std::vector<Step>> choices;
    for (int l = n; l >= 3; --l) choices.push_back(ordered_pairs(l));
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
        std::vector<Step> steps;
        steps.reserve(choices.size());
        for (std::size_t s = 0; s < choices.size(); ++s) steps.push_back(choices[s][digit[s]]);
        visit(build_iterated_sequence(2, n, std::move(steps)));
        // Odometer with the level-3 digit spinning fastest.
        std::size_t pos = choices.size();
        while (pos > 0) {
            --pos;
            if (++digit[pos] < choices[pos].size()) break;
            digit[pos] = 0;
            if (pos == 0) return;
        }
    }
}

std::vector<IteratedSequence> enumerate_iterated_sequences(int k, int n) {
    if (k != 2) throw InputError("enumeration is only supported for k=2");
    std::vector<IteratedSequence> out;
    out.reserve(static_cast<std::size_t>(count_iterated_sequences(n)));
    for_each_iterated_sequence(n, [&](const IteratedSequence& s) { out.push_back(s); });
    return out;
}

IteratedSequence random_iterated_sequence(int k, int n, std::mt19937_64& rng) {
    if (k < 1 || n <= k) throw InputError("need n > k >= 1");
    std::vector<Step> steps;
    for (int level = n; level > k; --level) {
        std::vector<int> pool(static_cast<std::size_t>(level - 1));
        std::iota(pool.begin(), pool.end(), 1);
        // Partial Fisher-Yates: the first k entries form a uniform ordered draw.
        for (int a = 0; a < k; ++a) {
            std::uniform_int_distribution<int> pick(a, level - 2);
            std::swap(pool[static_cast<std::size_t>(a)], pool[static_cast<std::size_t>(pick(rng))]);
        }
        steps.emplace_back(pool.begin(), pool.begin() + k);
    }
    return build_iterated_sequence(k, n, std::move(steps));
}

std::vector<IteratedSequence> sample_iterated_sequences(int k, int n, std::size_t sample,
                                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<IteratedSequence> out;
    out.reserve(sample);
    for (std::size_t s = 0; s < sample; ++s) out.push_back(random_iterated_sequence(k, n, rng));
    return out;
}

}  // namespace tropseq
