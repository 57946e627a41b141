#ifndef TROP_CURVE_HPP
#define TROP_CURVE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// Length of a bounded edge: opaque metadata, positive rational or infinity.
// No counting operation reads it; stability's "smooth" only asks finiteness.
struct EdgeLength {
    enum class Kind { Unset, Finite, Infinite };
    Kind kind = Kind::Unset;
    Rational value;

    static EdgeLength unset() { return {}; }
    static EdgeLength finite(Rational v) {
        if (!(v > Rational(0))) fail(errk::InvalidCurve, "edge length must be positive");
        return {Kind::Finite, v};
    }
    static EdgeLength infinite() { return {Kind::Infinite, Rational(0)}; }

    bool is_infinite() const { return kind == Kind::Infinite; }
    friend bool operator==(const EdgeLength& a, const EdgeLength& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
    }
};

struct Vertex {
    int id;
    int genus;
};

struct BoundedEdge {
    int id;
    int a;
    int b;
    EdgeLength length;
};

struct Puncture {
    int id;
    int at;
};

// Finite connected semi-graph with genus labels; punctures are unbounded
// edges, addressable as first-class entities so divisors on the completion
// need no separate type.
class TropicalCurve {
public:
    int add_vertex(int genus = 0);
    int add_edge(int a, int b, EdgeLength length = EdgeLength::unset());
    int add_puncture(int at);

    // Explicit-id variants for deserialization.
    void add_vertex_with_id(int id, int genus = 0);
    void add_edge_with_id(int id, int a, int b, EdgeLength length = EdgeLength::unset());
    void add_puncture_with_id(int id, int at);

    // Throws InvalidCurve unless connected, references resolve, genus labels
    // are >= 0, and (unless allowed) there are no loops.
    void validate(bool allow_loops = false) const;

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<BoundedEdge>& edges() const { return edges_; }
    const std::vector<Puncture>& punctures() const { return punctures_; }

    bool has_vertex(int id) const;
    bool has_edge(int id) const;
    bool has_puncture(int id) const;

    const Vertex& vertex(int id) const;
    const BoundedEdge& edge(int id) const;
    const Puncture& puncture(int id) const;

    int genus_sum() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<BoundedEdge> edges_;
    std::vector<Puncture> punctures_;
    std::map<int, size_t> vertex_index_;
    std::map<int, size_t> edge_index_;
    std::map<int, size_t> puncture_index_;
    int next_vertex_id_ = 0;
    int next_edge_id_ = 0;
    int next_puncture_id_ = 0;
};

// Bounded-edge endpoint incidences (a loop counts twice) plus punctures.
int vertex_degree(const TropicalCurve& curve, int v);

// #bounded edges - #vertices + 1 for a connected curve; the completion adds
// one edge and one vertex per puncture, so the value is unchanged there.
int first_betti(const TropicalCurve& curve);

// 1 + sum_v (g_v - 1) + #bounded edges = first_betti + sum_v g_v.
int arithmetic_genus(const TropicalCurve& curve);

enum class Stability { Unstable, Stable, Smooth };
Stability stability_status(const TropicalCurve& curve);

const char* stability_name(Stability s);

// Integer coefficients on vertices and puncture-ends of the completion.
// Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;
    explicit Divisor(const TropicalCurve& curve) : curve_(&curve) {}

    void add_at_vertex(int id, int c);
    void add_at_puncture(int id, int c);

    int at_vertex(int id) const;
    int at_puncture(int id) const;

    const std::map<int, int>& vertex_coeffs() const { return vertex_coeffs_; }
    const std::map<int, int>& puncture_coeffs() const { return puncture_coeffs_; }
    const TropicalCurve* curve() const { return curve_; }

    friend Divisor operator+(Divisor a, const Divisor& b);
    friend Divisor operator-(Divisor a, const Divisor& b);
    friend bool operator==(const Divisor& a, const Divisor& b) {
        return a.vertex_coeffs_ == b.vertex_coeffs_ && a.puncture_coeffs_ == b.puncture_coeffs_;
    }

    std::string str() const;

private:
    const TropicalCurve* curve_ = nullptr;
    std::map<int, int> vertex_coeffs_;
    std::map<int, int> puncture_coeffs_;
};

// deg(v) - 2 at finite vertices, -1 at every puncture-end.
Divisor canonical_divisor(const TropicalCurve& curve);

int divisor_degree(const Divisor& d);
bool is_effective(const Divisor& d);
Divisor part_at_infinity(const Divisor& d);

} // namespace trop

#endif
