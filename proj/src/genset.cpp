#include "rns/genset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rns {

GenSet::GenSet(std::vector<int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty() && elems_.front() < 1) {
        throw std::invalid_argument("GenSet: generators must be >= 1");
    }
}

int GenSet::min() const {
    if (elems_.empty()) throw std::invalid_argument("GenSet::min on empty set");
    return elems_.front();
}

int GenSet::max() const {
    if (elems_.empty()) throw std::invalid_argument("GenSet::max on empty set");
    return elems_.back();
}

int GenSet::gcd() const {
    int g = 0;
    for (int a : elems_) g = std::gcd(g, a);
    return g;
}

GenSet GenSet::divided_by(int d) const {
    if (d < 1) throw std::invalid_argument("GenSet::divided_by: d must be >= 1");
    std::vector<int> out;
    out.reserve(elems_.size());
    for (int a : elems_) {
        if (a % d != 0) throw std::invalid_argument("GenSet::divided_by: element not divisible");
        out.push_back(a / d);
    }
    return GenSet(std::move(out));
}

GenSet GenSet::scaled_by(int d) const {
    if (d < 1) throw std::invalid_argument("GenSet::scaled_by: d must be >= 1");
    std::vector<int> out;
    out.reserve(elems_.size());
    for (int a : elems_) out.push_back(a * d);
    return GenSet(std::move(out));
}

std::string to_string(const GenSet& a) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : a.elements()) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

GenSet parse_genset(const std::string& text) {
    std::string body;
    body.reserve(text.size());
    for (char c : text) {
        if (c == '{' || c == '}' || c == ' ' || c == '\t') continue;
        body.push_back(c);
    }
    std::vector<int> elems;
    if (!body.empty()) {
        std::istringstream is(body);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("parse_genset: empty element in '" + text + "'");
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("parse_genset: bad integer '" + tok + "'");
            }
            if (pos != tok.size()) throw std::invalid_argument("parse_genset: bad integer '" + tok + "'");
            elems.push_back(v);
        }
    }
    return GenSet(std::move(elems));
}

}  // namespace rns
