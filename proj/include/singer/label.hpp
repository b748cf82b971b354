#pragma once

#include <cstdint>

#include "singer/errors.hpp"

namespace singer {

// Edge labels m_st.  Finite values are integers in [2, kMaxLabel]; a pair of
// vertices with no edge between them reads back as the infinite label.  The
// infinite label is only ever a query result, it is never stored.
class Label {
public:
    static constexpr int kMaxLabel = 1'000'000;

    static Label infinite() { return Label(0); }
    static Label finite(int m) {
        if (m < 2 || m > kMaxLabel)
            throw LabelError("edge label must be an integer in [2, 10^6], got " + std::to_string(m));
        return Label(m);
    }

    bool is_finite() const { return m_ != 0; }
    int value() const {
        if (!is_finite()) throw InfiniteLabel("label is infinite");
        return m_;
    }

    bool operator==(const Label&) const = default;

private:
    explicit Label(int m) : m_(m) {}
    int m_;  // 0 encodes infinity
};

}  // namespace singer
