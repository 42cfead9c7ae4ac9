#include "surveil/image_io.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace surveil::vision {

namespace {

// Next whitespace-delimited token, skipping '#' comments.
std::string next_token(std::istream& in) {
  std::string tok;
  for (;;) {
    int c = in.get();
    if (c == EOF) break;
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(static_cast<char>(c));
  }
  return tok;
}

}  // namespace

Frame read_pnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_pnm: cannot open " + path);

  std::string magic = next_token(in);
  int channels;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw std::runtime_error("read_pnm: unsupported magic '" + magic + "' in " + path);
  }

  int w = std::stoi(next_token(in));
  int h = std::stoi(next_token(in));
  int maxval = std::stoi(next_token(in));
  if (maxval != 255) {
    throw std::runtime_error("read_pnm: maxval must be 255 in " + path);
  }

  Frame f = make_frame(w, h, channels);
  in.read(reinterpret_cast<char*>(f.data.data()),
          static_cast<std::streamsize>(f.data.size()));
  if (in.gcount() != static_cast<std::streamsize>(f.data.size())) {
    throw std::runtime_error("read_pnm: truncated pixel data in " + path);
  }
  validate_frame(f);
  return f;
}

void write_pnm(const std::string& path, const Frame& f) {
  validate_frame(f);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_pnm: cannot open " + path);
  out << (f.channels == 1 ? "P5" : "P6") << "\n"
      << f.width << " " << f.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(f.data.data()),
            static_cast<std::streamsize>(f.data.size()));
  if (!out) throw std::runtime_error("write_pnm: write failed for " + path);
}

}  // namespace surveil::vision
