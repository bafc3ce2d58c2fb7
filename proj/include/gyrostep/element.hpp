#pragma once

#include <complex>
#include <cstdint>
#include <variant>

namespace gyro {

// Index into a finite carrier.
struct Label {
    std::uint32_t index = 0;
    friend bool operator==(const Label&, const Label&) = default;
};

// Point of the open complex unit disk.
struct DiskPoint {
    double re = 0.0;
    double im = 0.0;
    std::complex<double> z() const { return {re, im}; }
    static DiskPoint from(std::complex<double> z) { return {z.real(), z.imag()}; }
};

// Velocity in the open ball of radius c.
struct Velocity {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using Element = std::variant<Label, DiskPoint, Velocity>;

// Euclidean norm of the coordinates. Throws carrier_mismatch for labels,
// which carry no geometry.
double euclidean_norm(const Element& e);

// Euclidean distance between two elements of the same shape.
double euclidean_distance(const Element& a, const Element& b);

}  // namespace gyro
