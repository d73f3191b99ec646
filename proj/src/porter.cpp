// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 servqual contributors

#include "servqual/porter.hpp"

#include <array>
#include <vector>

namespace servqual {

namespace {

bool is_vowel_letter(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// 'y' is a consonant at the start of a word or after a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
    const char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c != 'y') return true;
    return i == 0 || !is_consonant(w, i - 1);
}

// m in [C](VC){m}[V]
int measure(std::string_view stem) {
    int m = 0;
    bool prev_vowel = false;
    for (std::size_t i = 0; i < stem.size(); ++i) {
        const bool cons = is_consonant(stem, i);
        if (cons && prev_vowel) ++m;
        prev_vowel = !cons;
    }
    return m;
}

bool contains_vowel(std::string_view stem) {
    for (std::size_t i = 0; i < stem.size(); ++i) {
        if (!is_consonant(stem, i)) return true;
    }
    return false;
}

bool ends_double_consonant(std::string_view w) {
    const auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends consonant-vowel-consonant, last consonant not w, x or y
bool ends_cvc(std::string_view w) {
    const auto n = w.size();
    if (n < 3) return false;
    const char last = w[n - 1];
    return is_consonant(w, n - 3) && !is_consonant(w, n - 2) && is_consonant(w, n - 1) &&
           last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

enum class Cond { none, m_gt_0, m_gt_1, m_gt_1_st };

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    Cond cond;
};

bool holds(Cond c, std::string_view stem) {
    switch (c) {
    case Cond::none: return true;
    case Cond::m_gt_0: return measure(stem) > 0;
    case Cond::m_gt_1: return measure(stem) > 1;
    case Cond::m_gt_1_st:
        return measure(stem) > 1 && !stem.empty() && (stem.back() == 's' || stem.back() == 't');
    }
    return false;
}

// The first rule whose suffix matches decides; a failing condition stops
// the step without trying shorter suffixes.
template <std::size_t N>
void apply_rules(std::string& w, const std::array<Rule, N>& rules) {
    for (const auto& r : rules) {
        if (!ends_with(w, r.suffix)) continue;
        const std::string_view stem(w.data(), w.size() - r.suffix.size());
        if (holds(r.cond, stem)) {
            w.resize(stem.size());
            w.append(r.replacement);
        }
        return;
    }
}

void step1a(std::string& w) {
    static constexpr std::array<Rule, 4> rules{{
        {"sses", "ss", Cond::none},
        {"ies", "i", Cond::none},
        {"ss", "ss", Cond::none},
        {"s", "", Cond::none},
    }};
    apply_rules(w, rules);
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) w.resize(w.size() - 1);
        return;
    }
    std::size_t cut = 0;
    if (ends_with(w, "ed")) {
        cut = 2;
    } else if (ends_with(w, "ing")) {
        cut = 3;
    } else {
        return;
    }
    if (!contains_vowel(std::string_view(w).substr(0, w.size() - cut))) return;
    w.resize(w.size() - cut);

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        const char last = w.back();
        if (last != 'l' && last != 's' && last != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(std::string_view(w).substr(0, w.size() - 1))) w.back() = 'i';
}

void step2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate", Cond::m_gt_0}, {"tional", "tion", Cond::m_gt_0},
        {"enci", "ence", Cond::m_gt_0},   {"anci", "ance", Cond::m_gt_0},
        {"izer", "ize", Cond::m_gt_0},    {"abli", "able", Cond::m_gt_0},
        {"alli", "al", Cond::m_gt_0},     {"entli", "ent", Cond::m_gt_0},
        {"eli", "e", Cond::m_gt_0},       {"ousli", "ous", Cond::m_gt_0},
        {"ization", "ize", Cond::m_gt_0}, {"ation", "ate", Cond::m_gt_0},
        {"ator", "ate", Cond::m_gt_0},    {"alism", "al", Cond::m_gt_0},
        {"iveness", "ive", Cond::m_gt_0}, {"fulness", "ful", Cond::m_gt_0},
        {"ousness", "ous", Cond::m_gt_0}, {"aliti", "al", Cond::m_gt_0},
        {"iviti", "ive", Cond::m_gt_0},   {"biliti", "ble", Cond::m_gt_0},
    }};
    apply_rules(w, rules);
}

void step3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic", Cond::m_gt_0}, {"ative", "", Cond::m_gt_0}, {"alize", "al", Cond::m_gt_0},
        {"iciti", "ic", Cond::m_gt_0}, {"ical", "ic", Cond::m_gt_0}, {"ful", "", Cond::m_gt_0},
        {"ness", "", Cond::m_gt_0},
    }};
    apply_rules(w, rules);
}

void step4(std::string& w) {
    static constexpr std::array<Rule, 19> rules{{
        {"al", "", Cond::m_gt_1},   {"ance", "", Cond::m_gt_1}, {"ence", "", Cond::m_gt_1},
        {"er", "", Cond::m_gt_1},   {"ic", "", Cond::m_gt_1},   {"able", "", Cond::m_gt_1},
        {"ible", "", Cond::m_gt_1}, {"ant", "", Cond::m_gt_1},  {"ement", "", Cond::m_gt_1},
        {"ment", "", Cond::m_gt_1}, {"ent", "", Cond::m_gt_1},  {"ion", "", Cond::m_gt_1_st},
        {"ou", "", Cond::m_gt_1},   {"ism", "", Cond::m_gt_1},  {"ate", "", Cond::m_gt_1},
        {"iti", "", Cond::m_gt_1},  {"ous", "", Cond::m_gt_1},  {"ive", "", Cond::m_gt_1},
        {"ize", "", Cond::m_gt_1},
    }};
    apply_rules(w, rules);
}

void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    const std::string_view stem(w.data(), w.size() - 1);
    const int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

void step5b(std::string& w) {
    if (ends_with(w, "ll") && measure(std::string_view(w).substr(0, w.size() - 1)) > 1) w.pop_back();
}

} // namespace

std::string porter_stem(std::string_view token) {
    std::string w(token);
    step1a(w);
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

} // namespace servqual
