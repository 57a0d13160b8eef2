#include "chunkph/builders.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace chunkph {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_shape(const std::vector<index_t>& shape, const char* who) {
    if (shape.empty()) throw std::invalid_argument(std::string(who) + ": empty shape");
    for (index_t e : shape)
        if (e < 1) throw std::invalid_argument(std::string(who) + ": extent must be >= 1");
}

struct cell_key {
    double value;
    int dim;
    index_t lex;  // linearized doubled-grid coordinates, row-major

    bool operator<(const cell_key& other) const {
        if (value != other.value) return value < other.value;
        if (dim != other.dim) return dim < other.dim;
        return lex < other.lex;
    }
};

}  // namespace

index_t grayscale_image::vertex_count() const {
    index_t p = 1;
    for (index_t e : shape) p *= e;
    return shape.empty() ? 0 : p;
}

built_filtration lower_star_cubical(const grayscale_image& img) {
    require_shape(img.shape, "lower_star_cubical");
    const std::size_t d = img.shape.size();
    if (static_cast<index_t>(img.values.size()) != img.vertex_count())
        throw std::invalid_argument("lower_star_cubical: value count does not match shape");

    // cells live on the doubled grid: even coordinates are vertices, odd ones
    // unit intervals; a cell's dimension is its number of odd coordinates
    std::vector<index_t> doubled(d), vertex_stride(d), cell_stride(d);
    index_t cell_count = 1;
    for (std::size_t a = 0; a < d; ++a) {
        doubled[a] = 2 * img.shape[a] - 1;
        cell_count *= doubled[a];
    }
    vertex_stride[d - 1] = 1;
    cell_stride[d - 1] = 1;
    for (std::size_t a = d - 1; a > 0; --a) {
        vertex_stride[a - 1] = vertex_stride[a] * img.shape[a];
        cell_stride[a - 1] = cell_stride[a] * doubled[a];
    }

    std::vector<index_t> coords(d, 0);
    std::vector<cell_key> keys(static_cast<std::size_t>(cell_count));
    for (index_t lin = 0; lin < cell_count; ++lin) {
        int dim = 0;
        double value = 0.0;
        // max over the 2^dim corner vertices
        index_t base = 0;
        std::vector<std::size_t> odd_axes;
        for (std::size_t a = 0; a < d; ++a) {
            if (coords[a] % 2 == 0) {
                base += (coords[a] / 2) * vertex_stride[a];
            } else {
                ++dim;
                odd_axes.push_back(a);
                base += ((coords[a] - 1) / 2) * vertex_stride[a];
            }
        }
        for (index_t corner = 0; corner < (index_t{1} << dim); ++corner) {
            index_t v = base;
            for (std::size_t bit = 0; bit < odd_axes.size(); ++bit)
                if (corner >> bit & 1) v += vertex_stride[odd_axes[bit]];
            value = corner == 0 ? img.values[static_cast<std::size_t>(v)]
                                : std::max(value, img.values[static_cast<std::size_t>(v)]);
        }
        keys[static_cast<std::size_t>(lin)] = cell_key{value, dim, lin};
        for (std::size_t a = d; a-- > 0;) {
            if (++coords[a] < doubled[a]) break;
            coords[a] = 0;
        }
    }

    std::vector<index_t> order(static_cast<std::size_t>(cell_count));
    for (index_t i = 0; i < cell_count; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](index_t a, index_t b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
    std::vector<index_t> column_of(static_cast<std::size_t>(cell_count));
    for (index_t pos = 0; pos < cell_count; ++pos)
        column_of[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos + 1;

    built_filtration out;
    out.matrix.columns.resize(static_cast<std::size_t>(cell_count));
    out.matrix.dims.resize(static_cast<std::size_t>(cell_count));
    out.meta.values.resize(static_cast<std::size_t>(cell_count));
    out.meta.labels.resize(static_cast<std::size_t>(cell_count));

    for (index_t pos = 0; pos < cell_count; ++pos) {
        const index_t lin = order[static_cast<std::size_t>(pos)];
        const cell_key& key = keys[static_cast<std::size_t>(lin)];
        out.matrix.dims[static_cast<std::size_t>(pos)] = key.dim;
        out.meta.values[static_cast<std::size_t>(pos)] = key.value;
        sparse_column facets;
        std::vector<index_t> label(d);
        index_t rest = lin;
        for (std::size_t a = 0; a < d; ++a) {
            label[a] = rest / cell_stride[a];
            rest %= cell_stride[a];
        }
        out.meta.labels[static_cast<std::size_t>(pos)] = label;
        for (std::size_t a = 0; a < d; ++a) {
            if (label[a] % 2 == 0) continue;
            facets.push_back(column_of[static_cast<std::size_t>(lin - cell_stride[a])]);
            facets.push_back(column_of[static_cast<std::size_t>(lin + cell_stride[a])]);
        }
        std::sort(facets.begin(), facets.end());
        out.matrix.columns[static_cast<std::size_t>(pos)] = std::move(facets);
    }
    return out;
}

built_filtration rips_filtration(const point_cloud& pc, int max_dim,
                                 std::optional<double> threshold) {
    const index_t npts = static_cast<index_t>(pc.points.size());
    if (npts == 0) throw std::invalid_argument("rips_filtration: empty point cloud");
    if (max_dim < 0) throw std::invalid_argument("rips_filtration: max_dim must be >= 0");
    const std::size_t coord_dim = pc.points.front().size();
    for (const auto& p : pc.points)
        if (p.size() != coord_dim)
            throw std::invalid_argument("rips_filtration: points of unequal dimension");
    if (threshold && *threshold < 0)
        throw std::invalid_argument("rips_filtration: negative threshold");

    std::vector<std::vector<double>> dist(static_cast<std::size_t>(npts),
                                          std::vector<double>(static_cast<std::size_t>(npts), 0.0));
    double max_dist = 0.0;
    for (index_t a = 0; a < npts; ++a)
        for (index_t b = a + 1; b < npts; ++b) {
            double s = 0.0;
            for (std::size_t c = 0; c < coord_dim; ++c) {
                const double diff = pc.points[static_cast<std::size_t>(a)][c] -
                                    pc.points[static_cast<std::size_t>(b)][c];
                s += diff * diff;
            }
            const double e = std::sqrt(s);
            dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = e;
            dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = e;
            max_dist = std::max(max_dist, e);
        }
    const double cutoff = threshold.value_or(max_dist);

    struct simplex {
        double diameter;
        std::vector<index_t> vertices;
    };
    std::vector<simplex> simplices;
    std::vector<index_t> current;
    auto extend = [&](auto&& self, double diameter) -> void {
        if (!current.empty()) simplices.push_back({diameter, current});
        if (static_cast<int>(current.size()) == max_dim + 1) return;
        const index_t first = current.empty() ? 0 : current.back() + 1;
        for (index_t v = first; v < npts; ++v) {
            double extended = diameter;
            for (index_t u : current)
                extended = std::max(extended, dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
            if (extended > cutoff) continue;
            current.push_back(v);
            self(self, extended);
            current.pop_back();
        }
    };
    extend(extend, 0.0);

    std::sort(simplices.begin(), simplices.end(), [](const simplex& a, const simplex& b) {
        if (a.diameter != b.diameter) return a.diameter < b.diameter;
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });

    std::map<std::vector<index_t>, index_t> column_of;
    for (std::size_t pos = 0; pos < simplices.size(); ++pos)
        column_of[simplices[pos].vertices] = static_cast<index_t>(pos) + 1;

    built_filtration out;
    out.matrix.columns.resize(simplices.size());
    out.matrix.dims.resize(simplices.size());
    out.meta.values.resize(simplices.size());
    out.meta.labels.resize(simplices.size());
    for (std::size_t pos = 0; pos < simplices.size(); ++pos) {
        const auto& s = simplices[pos];
        out.matrix.dims[pos] = static_cast<int>(s.vertices.size()) - 1;
        out.meta.values[pos] = s.diameter;
        out.meta.labels[pos] = s.vertices;
        if (s.vertices.size() > 1) {
            sparse_column facets;
            std::vector<index_t> face(s.vertices.size() - 1);
            for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
                std::size_t w = 0;
                for (std::size_t r = 0; r < s.vertices.size(); ++r)
                    if (r != drop) face[w++] = s.vertices[r];
                facets.push_back(column_of.at(face));
            }
            std::sort(facets.begin(), facets.end());
            out.matrix.columns[pos] = std::move(facets);
        }
    }
    return out;
}

grayscale_image synth_image(synth_kind kind, const std::vector<index_t>& shape, std::uint64_t seed) {
    require_shape(shape, "synth_image");
    grayscale_image img;
    img.shape = shape;
    const index_t p = img.vertex_count();
    img.values.resize(static_cast<std::size_t>(p));

    if (kind == synth_kind::noise) {
        std::mt19937_64 rng(seed);
        for (auto& v : img.values) v = uniform01(rng);
        return img;
    }

    if (kind == synth_kind::smooth) {
        std::mt19937_64 rng(seed);
        constexpr int wave_count = 8;
        constexpr int frequency_cutoff = 3;
        const std::size_t d = shape.size();
        struct wave {
            std::vector<int> freq;
            double amplitude;
            double phase;
        };
        std::vector<wave> waves(wave_count);
        for (auto& w : waves) {
            w.freq.resize(d);
            do {
                for (auto& f : w.freq) f = static_cast<int>(rng() % (frequency_cutoff + 1));
            } while (std::all_of(w.freq.begin(), w.freq.end(), [](int f) { return f == 0; }));
            w.amplitude = 2.0 * uniform01(rng) - 1.0;
            w.phase = 2.0 * std::numbers::pi * uniform01(rng);
        }
        std::vector<index_t> coords(d, 0);
        for (index_t lin = 0; lin < p; ++lin) {
            double value = 0.0;
            for (const wave& w : waves) {
                double arg = w.phase;
                for (std::size_t a = 0; a < d; ++a)
                    arg += 2.0 * std::numbers::pi * w.freq[a] * static_cast<double>(coords[a]) /
                           static_cast<double>(shape[a]);
                value += w.amplitude * std::cos(arg);
            }
            img.values[static_cast<std::size_t>(lin)] = value;
            for (std::size_t a = d; a-- > 0;) {
                if (++coords[a] < shape[a]) break;
                coords[a] = 0;
            }
        }
        return img;
    }

    // mixed: the sum of the smooth and noise fields for the same seed, each
    // normalized to [0, 1]
    grayscale_image smooth = synth_image(synth_kind::smooth, shape, seed);
    grayscale_image noise = synth_image(synth_kind::noise, shape, seed);
    auto normalize = [](std::vector<double>& v) {
        const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        const double span = *hi - *lo;
        for (auto& x : v) x = span > 0 ? (x - *lo) / span : 0.0;
    };
    normalize(smooth.values);
    normalize(noise.values);
    for (std::size_t i = 0; i < img.values.size(); ++i)
        img.values[i] = smooth.values[i] + noise.values[i];
    return img;
}

synth_kind parse_synth_kind(const std::string& name) {
    if (name == "smooth") return synth_kind::smooth;
    if (name == "noise") return synth_kind::noise;
    if (name == "mixed") return synth_kind::mixed;
    throw std::invalid_argument("unknown synthetic image kind: " + name);
}

}  // namespace chunkph
