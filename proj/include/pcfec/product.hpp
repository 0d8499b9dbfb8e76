// Product code over a component code, and the n x n ternary frame the
// iterative decoders work on.
#pragma once

#include <cstdint>
#include <vector>

#include "pcfec/bch.hpp"
#include "pcfec/eaed.hpp"

namespace pcfec {

class ProductCode {
public:
    explicit ProductCode(ComponentCode component);

    const ComponentCode& component() const { return component_; }
    int n() const { return component_.n(); }
    int k() const { return component_.k(); }
    double rate() const; // k^2 / n^2

    // Encodes a k x k row-major message into an n x n row-major frame whose
    // every row and column is a component codeword. The message block sits
    // at rows/columns n-k..n-1.
    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& message) const;

private:
    ComponentCode component_;
};

struct TernaryFrame {
    int n = 0;
    std::vector<Trit> cells; // row-major

    TernaryFrame() = default;
    explicit TernaryFrame(int size) : n(size), cells(static_cast<std::size_t>(size) * size, Trit::Zero) {}

    Trit& at(int i, int j) { return cells[static_cast<std::size_t>(i) * n + j]; }
    Trit at(int i, int j) const { return cells[static_cast<std::size_t>(i) * n + j]; }

    TernaryWord row(int i) const;
    TernaryWord col(int j) const;
    void set_row(int i, const TernaryWord& w);
    void set_col(int j, const TernaryWord& w);

    int erasures() const;
};

TernaryFrame to_ternary_frame(const std::vector<std::uint8_t>& bits, int n);

// Hard projection of a frame; residual erasures are emitted as 0.
std::vector<std::uint8_t> hard_frame(const TernaryFrame& frame);

} // namespace pcfec
