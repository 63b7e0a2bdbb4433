#!/usr/bin/env python3
"""Writes data/routes/*.json: great-circle waypoints between airport pairs."""
import json
import math
import pathlib

AIRPORTS = {
    "PHL": (39.8719, -75.2411), "BOS": (42.3656, -71.0096),
    "JFK": (40.6413, -73.7781), "ORD": (41.9742, -87.9073),
    "LAX": (33.9416, -118.4085), "DEN": (39.8561, -104.6737),
    "IAH": (29.9902, -95.3368), "DCA": (38.8512, -77.0402),
    "LAS": (36.0840, -115.1537), "SFO": (37.6213, -122.3790),
    "LHR": (51.4700, -0.4543), "CDG": (49.0097, 2.5479),
    "PEK": (40.0799, 116.6031), "BOM": (19.0896, 72.8656),
    "SYD": (-33.9399, 151.1753),
}

# origin, destination, waypoint count, cruise altitude (ft)
ROUTES = [
    ("PHL", "BOS", 5, 28000), ("JFK", "ORD", 16, 35000), ("LAX", "DEN", 15, 35000),
    ("ORD", "IAH", 17, 35000), ("DCA", "LAS", 27, 37000), ("JFK", "SFO", 31, 37000),
    ("JFK", "LHR", 29, 39000), ("CDG", "PEK", 40, 39000), ("BOM", "SYD", 83, 39000),
]


def unit(lat, lon):
    la, lo = math.radians(lat), math.radians(lon)
    return (math.cos(la) * math.cos(lo), math.cos(la) * math.sin(lo), math.sin(la))


def slerp(a, b, t):
    omega = math.acos(max(-1.0, min(1.0, sum(x * y for x, y in zip(a, b)))))
    s = math.sin(omega)
    p = [(math.sin((1 - t) * omega) * x + math.sin(t * omega) * y) / s for x, y in zip(a, b)]
    return math.degrees(math.asin(p[2])), math.degrees(math.atan2(p[1], p[0]))


def altitude(t, cruise):
    if t <= 0.15:
        return cruise * t / 0.15
    if t >= 0.85:
        return cruise * (1 - t) / 0.15
    return cruise


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "routes"
    out.mkdir(parents=True, exist_ok=True)
    for orig, dest, count, cruise in ROUTES:
        a, b = unit(*AIRPORTS[orig]), unit(*AIRPORTS[dest])
        waypoints = []
        for i in range(count):
            t = i / (count - 1)
            lat, lon = slerp(a, b, t)
            waypoints.append({"lat": round(lat, 4), "lon": round(lon, 4), "alt_ft": round(altitude(t, cruise))})
        doc = {"origin": orig, "destination": dest, "max_altitude_ft": cruise, "waypoints": waypoints}
        (out / f"{orig}-{dest}.json").write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
