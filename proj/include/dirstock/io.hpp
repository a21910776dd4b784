#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dirstock/grids.hpp"
#include "dirstock/radon.hpp"
#include "dirstock/windows.hpp"

namespace dirstock::io {

// Every file is one line of JSON, a newline, then little-endian complex128 payload.

void write_grid(const std::string& path, const SignalGrid2D& f);
SignalGrid2D read_grid(const std::string& path);

void write_coefficients(const std::string& path, const CoefficientVolume& vol,
                        const nlohmann::json& extra = nlohmann::json::object());
CoefficientVolume read_coefficients(const std::string& path, nlohmann::json* header = nullptr);

void write_window(const std::string& path, const Window1D& w);
Window1D read_window(const std::string& path);

void write_sinogram(const std::string& path, const std::vector<Projection1D>& rho);
std::vector<Projection1D> read_sinogram(const std::string& path);

// 8-bit binary PGM, row-major, values already in [0, 255].
void write_pgm(const std::string& path, std::size_t width, std::size_t height,
               const std::vector<unsigned char>& pixels);

void write_json(const std::string& path, const nlohmann::json& j);

} // namespace dirstock::io
