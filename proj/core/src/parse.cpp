#include "foxmag/parse.hpp"

#include "foxmag/errors.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace foxmag {

namespace {

std::vector<std::string> tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

// Strips a trailing ^-1 if present; returns the exponent.
int strip_inverse(std::string& tok) {
    if (tok.size() >= 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
        tok.erase(tok.size() - 3);
        return -1;
    }
    return 1;
}

int parse_index(const std::string& s, const std::string& tok) {
    if (s.empty())
        throw ParseError("missing index in token '" + tok + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad index '" + s + "' in token '" + tok + "'");
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw ParseError("bad index '" + s + "' in token '" + tok + "'");
    }
}

std::vector<int> parse_bracket_indices(const std::string& body, const std::string& tok) {
    if (body.size() < 2 || body.front() != '[' || body.back() != ']')
        throw ParseError("expected bracketed indices in token '" + tok + "'");
    std::vector<int> out;
    std::string cur;
    for (std::size_t i = 1; i + 1 < body.size(); ++i) {
        if (body[i] == ',') {
            out.push_back(parse_index(cur, tok));
            cur.clear();
        } else {
            cur += body[i];
        }
    }
    out.push_back(parse_index(cur, tok));
    return out;
}

} // namespace

FreeWord parse_free_word(const std::string& text, int rank) {
    std::vector<int> letters;
    for (std::string tok : tokens(text)) {
        const std::string original = tok;
        const int pow = strip_inverse(tok);
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError("expected x<k> token, got '" + original + "'");
        const int k = parse_index(tok.substr(1), original);
        if (k < 1 || k > rank)
            throw ParseError("generator index " + std::to_string(k) +
                             " out of range for rank " + std::to_string(rank));
        letters.push_back(pow * k);
    }
    return FreeWord::reduce(rank, letters);
}

int max_free_word_index(const std::string& text) {
    int max_index = 0;
    for (std::string tok : tokens(text)) {
        const std::string original = tok;
        strip_inverse(tok);
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError("expected x<k> token, got '" + original + "'");
        max_index = std::max(max_index, parse_index(tok.substr(1), original));
    }
    return max_index;
}

GenWord parse_gen_word(const std::string& text, int n) {
    GenWord word;
    for (std::string tok : tokens(text)) {
        const std::string original = tok;
        const int pow = strip_inverse(tok);
        if (tok.empty())
            throw ParseError("empty token");
        const char head = tok[0];
        if (head == 's') {
            const int i = parse_index(tok.substr(1), original);
            if (i < 1 || i > n - 1)
                throw ParseError("braid index " + std::to_string(i) +
                                 " out of range for " + std::to_string(n) + " strands");
            word.push_back(GenLetter::sigma(i, pow));
            continue;
        }
        const std::vector<int> idx = parse_bracket_indices(tok.substr(1), original);
        for (int v : idx)
            if (v < 1 || v > n)
                throw ParseError("index " + std::to_string(v) +
                                 " out of range in token '" + original + "'");
        if (head == 'a') {
            if (idx.size() != 2 || !(idx[0] < idx[1]))
                throw ParseError("a[r,s] needs r < s, got '" + original + "'");
            word.push_back(GenLetter::pure(idx[0], idx[1], pow));
        } else if (head == 'e') {
            if (idx.size() == 2) {
                if (idx[0] == idx[1])
                    throw ParseError("e[i,j] needs i != j, got '" + original + "'");
                word.push_back(GenLetter::eps(idx[0], idx[1], pow));
            } else if (idx.size() == 3) {
                if (idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
                    throw ParseError("e[i,j,k] needs distinct indices, got '" + original + "'");
                word.push_back(GenLetter::eps3(idx[0], idx[1], idx[2], pow));
            } else {
                throw ParseError("e takes two or three indices, got '" + original + "'");
            }
        } else {
            throw ParseError("unknown generator token '" + original + "'");
        }
    }
    return word;
}

BraidWord parse_braid_word(const std::string& text, int strands) {
    std::vector<int> letters;
    for (std::string tok : tokens(text)) {
        const std::string original = tok;
        const int pow = strip_inverse(tok);
        if (tok.size() < 2 || tok[0] != 's')
            throw ParseError("expected s<i> token, got '" + original + "'");
        const int i = parse_index(tok.substr(1), original);
        if (i < 1 || i > strands - 1)
            throw ParseError("braid index " + std::to_string(i) + " out of range for " +
                             std::to_string(strands) + " strands");
        letters.push_back(pow * i);
    }
    return BraidWord(strands, std::move(letters));
}

} // namespace foxmag
