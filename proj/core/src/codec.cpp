#include "dragoncrypto/codec.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "dragoncrypto/errors.hpp"

namespace dragoncrypto::codec {
namespace {

// One delimited side of the padding string: "D t1 D t2 D ... tn D" for
// delimiter D, a bare "D" when the side is empty. Coordinates never contain
// letters, so delimiter occurrences are unambiguous.
std::vector<FixedPoint> parse_side(std::string_view side, char delim) {
  if (side.empty() || side.front() != delim || side.back() != delim) {
    throw MalformedCiphertext("unbalanced coordinate delimiters");
  }
  std::vector<FixedPoint> coords;
  if (side.size() == 1) return coords;  // the shared single delimiter

  std::string_view inner = side.substr(1, side.size() - 2);
  while (true) {
    const std::size_t cut = inner.find(delim);
    const std::string_view token =
        cut == std::string_view::npos ? inner : inner.substr(0, cut);
    auto coord = FixedPoint::parse(token);
    if (!coord) {
      throw MalformedCiphertext("coordinate is not canonical fixed-point text");
    }
    coords.push_back(std::move(*coord));
    if (cut == std::string_view::npos) break;
    inner.remove_prefix(cut + 1);
  }
  return coords;
}

struct KeyField {
  std::string_view name;
  std::string_view value;
};

KeyField split_key_line(std::string_view line) {
  const std::size_t cut = line.find(" = ");
  if (cut == std::string_view::npos || cut == 0 || cut + 3 >= line.size()) {
    throw MalformedKey("key line is not \"name = value\"");
  }
  return KeyField{line.substr(0, cut), line.substr(cut + 3)};
}

Bigint key_int(const KeyField& field) {
  auto value = parse_canonical_int(field.value);
  if (!value) {
    throw MalformedKey("field \"" + std::string(field.name) +
                       "\" is not a canonical decimal integer");
  }
  return std::move(*value);
}

// Narrowing helper for the machine-word fields; values outside the window
// can never validate, so the range message names the real invariant.
long narrow(const KeyField& field, long lo, long hi) {
  const Bigint wide = key_int(field);
  if (wide < lo || wide > hi) {
    throw InvalidKeyParameters("field \"" + std::string(field.name) +
                               "\" outside [" + std::to_string(lo) + ", " +
                               std::to_string(hi) + "]");
  }
  return static_cast<long>(wide);
}

void expect_name(const KeyField& field, std::string_view name) {
  if (field.name != name) {
    throw MalformedKey("expected key field \"" + std::string(name) +
                       "\", found \"" + std::string(field.name) + "\"");
  }
}

}  // namespace

PrivateKey normalized(PrivateKey key) {
  if (key.p >= 2) {
    key.a = mod_floor(key.a, key.p);
    key.b = mod_floor(key.b, key.p);
  }
  return key;
}

koblitz::CurveParams validate_key(const PrivateKey& key) {
  field::Prime p = field::Prime::checked(key.p);
  if (key.a < 0 || key.a >= key.p || key.b < 0 || key.b >= key.p) {
    throw InvalidKeyParameters("curve coefficients must be reduced into [0, p)");
  }
  auto params = koblitz::CurveParams::checked(std::move(p), key.a, key.b);
  if (key.d < 1) {
    throw InvalidKeyParameters("Koblitz spread d must be at least 1");
  }
  if (key.mode == KeyMode::kPerCharacter &&
      key.d * (Bigint(koblitz::kCodePointBase) + 1) > key.p) {
    throw InvalidKeyParameters(
        "per-character mode needs d*(2^16+1) <= p so every code point embeds");
  }
  if (key.size < 1) {
    throw InvalidKeyParameters("step size must be at least 1");
  }
  if (key.iterations < 1 || key.iterations > kMaxIterations) {
    throw InvalidKeyParameters("iteration count outside [1, " +
                               std::to_string(kMaxIterations) + "]");
  }
  if (key.angle_deg < 0 || key.angle_deg >= 360) {
    throw InvalidKeyParameters("angle outside [0, 360) degrees");
  }
  if (key.precision < kMinPrecision || key.precision > kMaxPrecision) {
    throw InvalidKeyParameters("precision outside [" +
                               std::to_string(kMinPrecision) + ", " +
                               std::to_string(kMaxPrecision) + "]");
  }
  return params;
}

std::string render(const Ciphertext& ct) {
  std::string out;
  out.push_back('X');
  for (const PlanePoint& pt : ct.points) {
    out += pt.x.str();
    out.push_back('X');
  }
  out.push_back('Y');
  for (const PlanePoint& pt : ct.points) {
    out += pt.y.str();
    out.push_back('Y');
  }
  return out;
}

Ciphertext parse(std::string_view text) {
  const std::size_t mark = text.find("XY");
  if (mark == std::string_view::npos) {
    throw MalformedCiphertext("no \"XY\" mark between the coordinate lists");
  }
  std::vector<FixedPoint> xs = parse_side(text.substr(0, mark + 1), 'X');
  std::vector<FixedPoint> ys = parse_side(text.substr(mark + 1), 'Y');
  if (xs.size() != ys.size()) {
    throw MalformedCiphertext("x- and y-coordinate counts differ");
  }

  Ciphertext ct;
  ct.points.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].scale() != xs[0].scale() || ys[i].scale() != xs[0].scale()) {
      throw MalformedCiphertext("coordinates carry mixed fractional precision");
    }
    ct.points.push_back(PlanePoint{std::move(xs[i]), std::move(ys[i])});
  }
  return ct;
}

std::string write_key(const PrivateKey& key) {
  validate_key(key);
  std::string out;
  out += "version = " + std::to_string(kKeyFormatVersion) + "\n";
  out += "p = " + key.p.str() + "\n";
  out += "a = " + key.a.str() + "\n";
  out += "b = " + key.b.str() + "\n";
  out += "d = " + key.d.str() + "\n";
  out += "size = " + key.size.str() + "\n";
  out += "iterations = " + std::to_string(key.iterations) + "\n";
  out += "angle_deg = " + std::to_string(key.angle_deg) + "\n";
  out += "precision = " + std::to_string(key.precision) + "\n";
  out += std::string("mode = ") +
         (key.mode == KeyMode::kPerCharacter ? "per-char" : "block") + "\n";
  return out;
}

PrivateKey read_key(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const std::size_t cut = text.find('\n');
    if (cut == std::string_view::npos) {
      throw MalformedKey("key line without LF terminator");
    }
    lines.push_back(text.substr(0, cut));
    text.remove_prefix(cut + 1);
  }
  if (lines.size() != 10) {
    throw MalformedKey("key file must have exactly 10 lines, found " +
                       std::to_string(lines.size()));
  }

  const KeyField version = split_key_line(lines[0]);
  expect_name(version, "version");
  if (version.value != std::to_string(kKeyFormatVersion)) {
    throw MalformedKey("unsupported key format version \"" +
                       std::string(version.value) + "\"");
  }

  PrivateKey key;
  const KeyField p = split_key_line(lines[1]);
  expect_name(p, "p");
  key.p = key_int(p);

  const KeyField a = split_key_line(lines[2]);
  expect_name(a, "a");
  key.a = key_int(a);

  const KeyField b = split_key_line(lines[3]);
  expect_name(b, "b");
  key.b = key_int(b);

  const KeyField d = split_key_line(lines[4]);
  expect_name(d, "d");
  key.d = key_int(d);

  const KeyField size = split_key_line(lines[5]);
  expect_name(size, "size");
  key.size = key_int(size);

  const KeyField iterations = split_key_line(lines[6]);
  expect_name(iterations, "iterations");
  key.iterations = static_cast<unsigned>(narrow(iterations, 1, kMaxIterations));

  const KeyField angle = split_key_line(lines[7]);
  expect_name(angle, "angle_deg");
  key.angle_deg = static_cast<int>(narrow(angle, 0, 359));

  const KeyField precision = split_key_line(lines[8]);
  expect_name(precision, "precision");
  key.precision =
      static_cast<unsigned>(narrow(precision, kMinPrecision, kMaxPrecision));

  const KeyField mode = split_key_line(lines[9]);
  expect_name(mode, "mode");
  if (mode.value == "per-char") {
    key.mode = KeyMode::kPerCharacter;
  } else if (mode.value == "block") {
    key.mode = KeyMode::kBlock;
  } else {
    throw MalformedKey("mode must be \"per-char\" or \"block\"");
  }

  key = normalized(std::move(key));
  validate_key(key);
  return key;
}

}  // namespace dragoncrypto::codec
