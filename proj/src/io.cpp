#include "qstirling/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qstirling {

Multiset parse_multiset(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (c != '{' && c != '}') s.push_back(c);

    const bool comma_form = s.find(',') != std::string::npos;
    std::map<int, int> counts;
    if (comma_form) {
        // positional: "2,2,1" means k_1=2, k_2=2, k_3=1
        std::istringstream in(s);
        std::string tok;
        int value = 0;
        while (std::getline(in, tok, ',')) {
            ++value;
            size_t pos = 0;
            int k;
            try {
                k = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad multiplicity '" + tok + "'");
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("bad multiplicity '" + tok + "'");
            if (k < 1) throw std::invalid_argument("multiplicity must be >= 1");
            counts[value] = k;
        }
        if (counts.empty()) throw std::invalid_argument("empty multiset");
    } else {
        // value form: "1^2 2^2 3" (exponent omitted means 1)
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            const size_t caret = tok.find('^');
            const std::string val_s = tok.substr(0, caret);
            int value, k = 1;
            try {
                size_t pos = 0;
                value = std::stoi(val_s, &pos);
                if (pos != val_s.size()) throw std::invalid_argument("");
                if (caret != std::string::npos) {
                    const std::string exp_s = tok.substr(caret + 1);
                    k = std::stoi(exp_s, &pos);
                    if (pos != exp_s.size()) throw std::invalid_argument("");
                }
            } catch (const std::exception&) {
                throw std::invalid_argument("bad multiset token '" + tok + "'");
            }
            if (value < 1) throw std::invalid_argument("values must be >= 1");
            if (k < 1) throw std::invalid_argument("multiplicity must be >= 1");
            if (!counts.emplace(value, k).second)
                throw std::invalid_argument("value " + std::to_string(value) + " appears twice");
        }
        if (counts.empty()) throw std::invalid_argument("empty multiset");
        if (counts.begin()->first != 1 || counts.rbegin()->first != static_cast<int>(counts.size()))
            throw std::invalid_argument("values must cover 1..n with no gaps");
    }
    std::vector<int> mult;
    mult.reserve(counts.size());
    for (const auto& [v, k] : counts) mult.push_back(k);
    return Multiset(mult);
}

std::string word_to_text(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(const std::string& text) {
    Word w;
    if (text.find(' ') == std::string::npos &&
        std::all_of(text.begin(), text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        for (char c : text) {
            if (c == '0') throw std::invalid_argument("word entries must be >= 1");
            w.push_back(c - '0');
        }
        if (w.empty()) throw std::invalid_argument("empty word");
        return w;
    }
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word entry '" + tok + "'");
        }
        if (pos != tok.size()) throw std::invalid_argument("bad word entry '" + tok + "'");
        if (v < 1) throw std::invalid_argument("word entries must be >= 1");
        w.push_back(v);
    }
    if (w.empty()) throw std::invalid_argument("empty word");
    return w;
}

}  // namespace qstirling
