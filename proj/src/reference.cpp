#include "singer/reference.hpp"

namespace singer::reference {

std::vector<Triple> cliques3_bruteforce(const LabeledTriangulation& L) {
    const int n = L.vertex_count();
    std::vector<Triple> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!L.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (L.adjacent(a, c) && L.adjacent(b, c)) out.push_back({a, b, c});
        }
    return out;
}

std::vector<std::array<int, 4>> cliques4_bruteforce(const LabeledTriangulation& L) {
    const int n = L.vertex_count();
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!L.adjacent(a, b)) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!L.adjacent(a, c) || !L.adjacent(b, c)) continue;
                for (int d = c + 1; d < n; ++d)
                    if (L.adjacent(a, d) && L.adjacent(b, d) && L.adjacent(c, d))
                        out.push_back({a, b, c, d});
            }
        }
    return out;
}

std::vector<std::array<int, 4>> chordless4_bruteforce(const LabeledTriangulation& L) {
    const int n = L.vertex_count();
    std::vector<std::array<int, 4>> out;
    // scan all ordered candidates (a, b, c, d) with a the smallest corner
    // and b < d, testing the four cycle edges and both diagonals directly
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!L.adjacent(a, b)) continue;
            for (int c = a + 1; c < n; ++c) {
                if (c == b || !L.adjacent(b, c) || L.adjacent(a, c)) continue;
                for (int d = b + 1; d < n; ++d) {
                    if (d == c) continue;
                    if (!L.adjacent(c, d) || !L.adjacent(d, a)) continue;
                    if (L.adjacent(b, d)) continue;
                    out.push_back({a, b, c, d});
                }
            }
        }
    return out;
}

}  // namespace singer::reference
