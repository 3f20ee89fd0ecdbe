#pragma once

// Words in the free group on the rose generators. Letters carry a generator
// index and a sign (+1/-1); words are stored freely reduced.

#include <cstddef>
#include <string>
#include <vector>

namespace msec {

struct Letter {
    int gen = 0;
    int sign = 1;
    friend bool operator==(const Letter& a, const Letter& b) = default;
};

class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { free_reduce(); }

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    Word inverse() const {
        std::vector<Letter> inv;
        inv.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            inv.push_back({it->gen, -it->sign});
        return Word(std::move(inv));
    }

    friend Word operator*(const Word& a, const Word& b) {
        std::vector<Letter> cat = a.letters_;
        cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
        return Word(std::move(cat));
    }

    bool is_cyclically_reduced() const {
        if (letters_.size() < 2) return true;
        const Letter& f = letters_.front();
        const Letter& l = letters_.back();
        return !(f.gen == l.gen && f.sign == -l.sign);
    }

    Word cyclically_reduced() const {
        std::vector<Letter> v = letters_;
        while (v.size() >= 2 && v.front().gen == v.back().gen && v.front().sign == -v.back().sign) {
            v.erase(v.begin());
            v.pop_back();
        }
        return Word(std::move(v));
    }

    Word cyclic_rotation(std::size_t by) const {
        if (letters_.empty()) return *this;
        by %= letters_.size();
        std::vector<Letter> v(letters_.begin() + by, letters_.end());
        v.insert(v.end(), letters_.begin(), letters_.begin() + by);
        return Word(std::move(v));
    }

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }

private:
    void free_reduce() {
        std::vector<Letter> out;
        for (const Letter& l : letters_) {
            if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters_ = std::move(out);
    }

    std::vector<Letter> letters_;
};

}  // namespace msec
