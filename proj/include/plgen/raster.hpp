#ifndef PLGEN_RASTER_HPP
#define PLGEN_RASTER_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Core>

#include "plgen/errors.hpp"

namespace plgen {

/// Row-major dense plane, the storage behind every raster type.
template <typename Scalar>
using Plane = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using Index = Eigen::Index;

/// Reserved label marking pixels excluded from training and (configurably)
/// evaluation. Never a class index.
inline constexpr std::uint8_t kIgnoreLabel = 255;

/// Dense 2D raster indexed (row, col), origin top-left. Immutable by
/// convention once handed to another module; all per-pixel math goes through
/// the underlying Eigen plane so callers can stay expression-based.
template <typename Scalar>
class Raster {
public:
    using PlaneType = Plane<Scalar>;

    Raster() = default;
    Raster(Index height, Index width, Scalar fill = Scalar{})
        : plane_(PlaneType::Constant(height, width, fill)) {}
    explicit Raster(PlaneType plane) : plane_(std::move(plane)) {}

    Index height() const { return plane_.rows(); }
    Index width() const { return plane_.cols(); }
    Index size() const { return plane_.size(); }
    bool empty() const { return plane_.size() == 0; }

    Scalar operator()(Index row, Index col) const { return plane_(row, col); }
    Scalar& operator()(Index row, Index col) { return plane_(row, col); }

    const PlaneType& plane() const { return plane_; }
    PlaneType& plane() { return plane_; }

    const Scalar* data() const { return plane_.data(); }
    Scalar* data() { return plane_.data(); }

    friend bool operator==(const Raster& a, const Raster& b) {
        return a.height() == b.height() && a.width() == b.width() &&
               (a.plane_ == b.plane_).all();
    }
    friend bool operator!=(const Raster& a, const Raster& b) { return !(a == b); }

private:
    PlaneType plane_;
};

/// Per-pixel class indices in [0, num_classes) plus the reserved ignore
/// value 255. Class 0 always means background.
struct LabelMap : Raster<std::uint8_t> {
    using Raster::Raster;
};

/// Per-pixel object/background prior; true marks object.
struct ObjectnessMask : Raster<bool> {
    using Raster::Raster;
};

/// 8-bit score raster, value = score * 255. Carrier for objectness-score
/// images before binarization.
struct ProbRaster : Raster<std::uint8_t> {
    using Raster::Raster;
};

/// First pixel (row-major order) whose value violates the label-map
/// contract, with the offending value.
struct LabelViolation {
    Index row = 0;
    Index col = 0;
    std::uint8_t value = 0;
};

inline void require_same_shape(Index h1, Index w1, Index h2, Index w2,
                               const char* what) {
    if (h1 != h2 || w1 != w2) {
        throw ShapeError(std::string(what) + ": " + std::to_string(h1) + "x" +
                         std::to_string(w1) + " vs " + std::to_string(h2) + "x" +
                         std::to_string(w2));
    }
}

/// Threshold a score raster into an objectness mask: true iff value >= tau.
/// tau = 0 yields an all-true mask; 0/255 binary images binarize exactly at
/// the default tau of 128.
inline ObjectnessMask binarize_objectness(const ProbRaster& prob, std::uint8_t tau) {
    return ObjectnessMask(Plane<bool>(prob.plane() >= tau));
}

/// Check that every pixel is a class index in [0, num_classes) or the ignore
/// value. Returns the first offender in row-major order, or nullopt when the
/// map is clean. num_classes must lie in [1, 255).
inline std::optional<LabelViolation> validate_label_map(const LabelMap& map,
                                                        int num_classes) {
    if (num_classes < 1 || num_classes >= 255) {
        throw ValidationError("num_classes must be in [1, 255), got " +
                              std::to_string(num_classes));
    }
    const auto limit = static_cast<std::uint8_t>(num_classes);
    for (Index r = 0; r < map.height(); ++r) {
        for (Index c = 0; c < map.width(); ++c) {
            const std::uint8_t v = map(r, c);
            if (v >= limit && v != kIgnoreLabel) {
                return LabelViolation{r, c, v};
            }
        }
    }
    return std::nullopt;
}

} // namespace plgen

#endif
