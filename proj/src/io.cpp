#include "dirstock/io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace dirstock::io {
namespace {

using nlohmann::json;

static_assert(std::endian::native == std::endian::little, "payload is written in native order");

void write_file(const std::string& path, const json& header, const std::vector<const std::vector<cplx>*>& parts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open " + path + " for writing");
    out << header.dump() << '\n';
    for (const auto* p : parts)
        out.write(reinterpret_cast<const char*>(p->data()), std::streamsize(p->size() * sizeof(cplx)));
    if (!out) throw InvalidArgument("write failed: " + path);
}

struct Loaded {
    json header;
    std::vector<cplx> payload;
};

Loaded read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    Loaded l;
    std::string line;
    std::getline(in, line);
    try {
        l.header = json::parse(line);
    } catch (const json::exception& e) {
        throw InvalidArgument(path + ": bad header: " + e.what());
    }
    std::vector<char> rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (rest.size() % sizeof(cplx)) throw InvalidArgument(path + ": truncated payload");
    l.payload.resize(rest.size() / sizeof(cplx));
    std::memcpy(l.payload.data(), rest.data(), rest.size());
    return l;
}

void expect_type(const json& h, const char* type, const std::string& path) {
    if (h.value("type", std::string()) != type)
        throw InvalidArgument(path + ": expected a " + std::string(type) + " file");
}

std::vector<cplx> take(std::vector<cplx>& payload, std::size_t& pos, std::size_t n, const std::string& path) {
    if (pos + n > payload.size()) throw InvalidArgument(path + ": payload shorter than header says");
    std::vector<cplx> v(payload.begin() + std::ptrdiff_t(pos), payload.begin() + std::ptrdiff_t(pos + n));
    pos += n;
    return v;
}

} // namespace

void write_grid(const std::string& path, const SignalGrid2D& f) {
    f.validate();
    json h = {{"type", "grid"}, {"nx", f.nx}, {"ny", f.ny}, {"x0", f.x0},
              {"y0", f.y0},     {"dx", f.dx}, {"dy", f.dy}, {"dtype", "c128"}};
    write_file(path, h, {&f.values});
}

SignalGrid2D read_grid(const std::string& path) {
    auto l = read_file(path);
    expect_type(l.header, "grid", path);
    const auto& h = l.header;
    SignalGrid2D f(h.at("nx").get<std::size_t>(), h.at("ny").get<std::size_t>(), h.at("x0").get<double>(),
                   h.at("y0").get<double>(), h.at("dx").get<double>(), h.at("dy").get<double>());
    if (l.payload.size() != f.values.size()) throw InvalidArgument(path + ": payload size mismatch");
    f.values = std::move(l.payload);
    f.validate();
    return f;
}

void write_coefficients(const std::string& path, const CoefficientVolume& vol, const json& extra) {
    if (vol.values.size() != vol.axes.size()) throw InvalidArgument("coefficient array does not match axes");
    json h = {{"type", "coefficients"},        {"angles", vol.axes.angles},
              {"offsets", vol.axes.offsets},   {"scales", vol.axes.scales},
              {"n", vol.axes.n},               {"dtype", "c128"},
              {"extra", extra}};
    write_file(path, h, {&vol.values});
}

CoefficientVolume read_coefficients(const std::string& path, json* header) {
    auto l = read_file(path);
    expect_type(l.header, "coefficients", path);
    const auto& h = l.header;
    auto ax = CoefficientAxes::from_arrays(h.at("angles").get<std::vector<double>>(),
                                           h.at("offsets").get<std::vector<double>>(),
                                           h.at("scales").get<std::vector<double>>(), h.value("n", 2));
    CoefficientVolume v(std::move(ax));
    if (l.payload.size() != v.values.size()) throw InvalidArgument(path + ": payload size mismatch");
    v.values = std::move(l.payload);
    if (header) *header = h;
    return v;
}

void write_window(const std::string& path, const Window1D& w) {
    const auto g = w.grid();
    json h = {{"type", "window"},
              {"kind", w.kind()},
              {"derivative_order", w.derivative_order()},
              {"center", w.center},
              {"halfwidth", w.halfwidth},
              {"sigma", w.sigma},
              {"support", {w.support_lo(), w.support_hi()}},
              {"step", g.step},
              {"count", g.count},
              {"s1", w.s1_flag()},
              {"s1_defect", w.s1_defect()}};
    write_file(path, h, {&w.spectral_table().values, &w.time_table().values});
}

Window1D read_window(const std::string& path) {
    auto l = read_file(path);
    expect_type(l.header, "window", path);
    const auto& h = l.header;
    SpectralGrid g{h.at("step").get<double>(), h.at("count").get<std::size_t>()};
    const std::string kind = h.value("kind", std::string("table"));
    const int order = h.value("derivative_order", 0);
    // Known families are rebuilt from their parameters so the analytic spectrum is kept.
    if (kind == "bump" || kind == "box" || kind == "gaussian") {
        Window1D w = kind == "bump" ? freq_bump_window(h.at("center").get<double>(), h.at("halfwidth").get<double>(), g)
                     : kind == "box"
                         ? box_window(h.at("center").get<double>() - h.at("halfwidth").get<double>(),
                                      h.at("center").get<double>() + h.at("halfwidth").get<double>(), g)
                         : gaussian_window(h.at("sigma").get<double>(), g);
        return order ? derivative_window(w, order) : w;
    }
    std::size_t pos = 0;
    auto spec = take(l.payload, pos, g.count, path);
    auto time = take(l.payload, pos, g.count, path);
    return Window1D::from_tables(kind, g, std::move(spec), std::move(time));
}

void write_sinogram(const std::string& path, const std::vector<Projection1D>& rho) {
    if (rho.empty()) throw InvalidArgument("empty sinogram");
    json thetas = json::array();
    std::vector<cplx> all;
    for (const auto& r : rho) {
        if (r.p.count != rho[0].p.count || r.p.start != rho[0].p.start || r.p.step != rho[0].p.step)
            throw InvalidArgument("sinogram projections must share one p grid");
        thetas.push_back(r.theta);
        all.insert(all.end(), r.values.begin(), r.values.end());
    }
    json h = {{"type", "sinogram"}, {"theta", thetas}, {"p0", rho[0].p.start},
              {"dp", rho[0].p.step}, {"np", rho[0].p.count}};
    write_file(path, h, {&all});
}

std::vector<Projection1D> read_sinogram(const std::string& path) {
    auto l = read_file(path);
    expect_type(l.header, "sinogram", path);
    const auto& h = l.header;
    UniformGrid1D p{h.at("p0").get<double>(), h.at("dp").get<double>(), h.at("np").get<std::size_t>()};
    std::vector<Projection1D> out;
    std::size_t pos = 0;
    for (double th : h.at("theta").get<std::vector<double>>())
        out.push_back({th, p, take(l.payload, pos, p.count, path)});
    return out;
}

void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<unsigned char>& pixels) {
    if (pixels.size() != width * height) throw InvalidArgument("pgm: pixel count mismatch");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot open " + path + " for writing");
    out << "P5\n" << width << ' ' << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()), std::streamsize(pixels.size()));
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

} // namespace dirstock::io
