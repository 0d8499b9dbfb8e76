#include "pcfec/product.hpp"

#include <string>

namespace pcfec {

ProductCode::ProductCode(ComponentCode component) : component_(std::move(component)) {}

double ProductCode::rate() const {
    const double kk = component_.k();
    const double nn = component_.n();
    return (kk * kk) / (nn * nn);
}

std::vector<std::uint8_t> ProductCode::encode(const std::vector<std::uint8_t>& message) const {
    const int n = component_.n();
    const int k = component_.k();
    const int off = n - k;
    if (static_cast<int>(message.size()) != k * k)
        throw DimensionMismatch("message size " + std::to_string(message.size()) +
                                ", expected " + std::to_string(k) + "x" + std::to_string(k));

    std::vector<std::uint8_t> frame(static_cast<std::size_t>(n) * n, 0);
    // message rows first, then every column; parity-on-parity follows by linearity
    for (int r = 0; r < k; ++r) {
        BitWord cw = component_.encode({&message[static_cast<std::size_t>(r) * k], static_cast<std::size_t>(k)});
        for (int j = 0; j < n; ++j) frame[static_cast<std::size_t>(off + r) * n + j] = cw[static_cast<std::size_t>(j)];
    }
    BitWord colmsg(static_cast<std::size_t>(k));
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < k; ++r) colmsg[static_cast<std::size_t>(r)] = frame[static_cast<std::size_t>(off + r) * n + j];
        BitWord cw = component_.encode(colmsg);
        for (int i = 0; i < off; ++i) frame[static_cast<std::size_t>(i) * n + j] = cw[static_cast<std::size_t>(i)];
    }
    return frame;
}

TernaryWord TernaryFrame::row(int i) const {
    if (i < 0 || i >= n) throw IndexOutOfRange("row index " + std::to_string(i));
    return TernaryWord(cells.begin() + static_cast<std::ptrdiff_t>(i) * n,
                       cells.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
}

TernaryWord TernaryFrame::col(int j) const {
    if (j < 0 || j >= n) throw IndexOutOfRange("column index " + std::to_string(j));
    TernaryWord w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = cells[static_cast<std::size_t>(i) * n + j];
    return w;
}

void TernaryFrame::set_row(int i, const TernaryWord& w) {
    if (i < 0 || i >= n) throw IndexOutOfRange("row index " + std::to_string(i));
    if (static_cast<int>(w.size()) != n) throw LengthMismatch("row write of wrong length");
    std::copy(w.begin(), w.end(), cells.begin() + static_cast<std::ptrdiff_t>(i) * n);
}

void TernaryFrame::set_col(int j, const TernaryWord& w) {
    if (j < 0 || j >= n) throw IndexOutOfRange("column index " + std::to_string(j));
    if (static_cast<int>(w.size()) != n) throw LengthMismatch("column write of wrong length");
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i) * n + j] = w[static_cast<std::size_t>(i)];
}

int TernaryFrame::erasures() const {
    int e = 0;
    for (Trit v : cells) e += (v == Trit::Erased);
    return e;
}

TernaryFrame to_ternary_frame(const std::vector<std::uint8_t>& bits, int n) {
    TernaryFrame f(n);
    for (std::size_t i = 0; i < f.cells.size(); ++i) f.cells[i] = bits[i] ? Trit::One : Trit::Zero;
    return f;
}

std::vector<std::uint8_t> hard_frame(const TernaryFrame& frame) {
    std::vector<std::uint8_t> out(frame.cells.size(), 0);
    for (std::size_t i = 0; i < frame.cells.size(); ++i) out[i] = (frame.cells[i] == Trit::One) ? 1 : 0;
    return out;
}

} // namespace pcfec
