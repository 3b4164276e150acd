#!/usr/bin/env python3
# Copyright 2026 The idwmap Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the demo datasets under apps/.

Output is deterministic: running twice produces byte-identical files.
"""

import argparse
import csv
import pathlib
import random

ROOT = pathlib.Path(__file__).resolve().parent.parent

US_INSTITUTIONS = [
    ("University of New Mexico", "Albuquerque", "New Mexico", 35.0844, -106.6198),
    ("Arizona State University", "Tempe", "Arizona", 33.4242, -111.9281),
    ("University of Colorado Boulder", "Boulder", "Colorado", 40.0076, -105.2659),
    ("University of Utah", "Salt Lake City", "Utah", 40.7649, -111.8421),
    ("University of Washington", "Seattle", "Washington", 47.6553, -122.3035),
    ("Oregon State University", "Corvallis", "Oregon", 44.5638, -123.2794),
    ("University of California, Berkeley", "Berkeley", "California", 37.8719, -122.2585),
    ("University of California, Santa Barbara", "Santa Barbara", "California", 34.4140, -119.8489),
    ("Stanford University", "Stanford", "California", 37.4275, -122.1697),
    ("University of Texas at Austin", "Austin", "Texas", 30.2849, -97.7341),
    ("Texas A&M University", "College Station", "Texas", 30.6187, -96.3365),
    ("University of Oklahoma", "Norman", "Oklahoma", 35.2059, -97.4457),
    ("University of Kansas", "Lawrence", "Kansas", 38.9543, -95.2558),
    ("University of Nebraska-Lincoln", "Lincoln", "Nebraska", 40.8202, -96.7005),
    ("University of Minnesota", "Minneapolis", "Minnesota", 44.9740, -93.2277),
    ("University of Wisconsin-Madison", "Madison", "Wisconsin", 43.0766, -89.4125),
    ("University of Illinois Urbana-Champaign", "Urbana", "Illinois", 40.1020, -88.2272),
    ("Michigan State University", "East Lansing", "Michigan", 42.7018, -84.4822),
    ("Ohio State University", "Columbus", "Ohio", 40.0067, -83.0305),
    ("Purdue University", "West Lafayette", "Indiana", 40.4237, -86.9212),
    ("University of Kentucky", "Lexington", "Kentucky", 38.0307, -84.5040),
    ("University of Tennessee", "Knoxville", "Tennessee", 35.9544, -83.9295),
    ("University of Georgia", "Athens", "Georgia", 33.9480, -83.3773),
    ("University of Florida", "Gainesville", "Florida", 29.6436, -82.3549),
    ("University of South Carolina", "Columbia", "South Carolina", 33.9940, -81.0301),
    ("University of North Carolina at Chapel Hill", "Chapel Hill", "North Carolina", 35.9049, -79.0469),
    ("Virginia Tech", "Blacksburg", "Virginia", 37.2284, -80.4234),
    ("University of Maryland", "College Park", "Maryland", 38.9869, -76.9426),
    ("Pennsylvania State University", "University Park", "Pennsylvania", 40.7982, -77.8599),
    ("Cornell University", "Ithaca", "New York", 42.4534, -76.4735),
    ("Columbia University", "New York", "New York", 40.8075, -73.9626),
    ("Clark University", "Worcester", "Massachusetts", 42.2510, -71.8230),
    ("Boston University", "Boston", "Massachusetts", 42.3505, -71.1054),
    ("University of Connecticut", "Storrs", "Connecticut", 41.8077, -72.2540),
    ("Louisiana State University", "Baton Rouge", "Louisiana", 30.4133, -91.1800),
]

WORLD_INSTITUTIONS = [
    ("Wuhan University", "China", 30.5360, 114.3643),
    ("Peking University", "China", 39.9869, 116.3059),
    ("Tsinghua University", "China", 40.0000, 116.3264),
    ("Chinese Academy of Sciences", "China", 39.9792, 116.3267),
    ("University of Tokyo", "Japan", 35.7126, 139.7620),
    ("Indian Institute of Technology Bombay", "India", 19.1334, 72.9133),
    ("University of Sao Paulo", "Brazil", -23.5614, -46.7308),
    ("University of Melbourne", "Australia", -37.7963, 144.9614),
    ("Wageningen University", "Netherlands", 51.9851, 5.6637),
    ("University of Twente", "Netherlands", 52.2393, 6.8555),
    ("Technical University of Munich", "Germany", 48.1497, 11.5679),
    ("Humboldt University of Berlin", "Germany", 52.5180, 13.3934),
    ("University of Copenhagen", "Denmark", 55.6802, 12.5724),
    ("Sapienza University of Rome", "Italy", 41.9037, 12.5144),
    ("University of Nairobi", "Kenya", -1.2797, 36.8163),
]

JOURNALS = [
    "Remote Sensing", "Remote Sensing of Environment", "ISPRS Journal of Photogrammetry and Remote Sensing",
    "International Journal of Applied Earth Observation and Geoinformation", "Science of Remote Sensing",
    "IEEE Journal of Selected Topics in Applied Earth Observations and Remote Sensing",
    "GIScience & Remote Sensing", "Environmental Modelling & Software", "Land", "Sustainability",
]
FOCUS = ["land cover", "agriculture", "forest", "water", "urban", "wetland", "disaster", "soil", "climate"]
RS_DATA = ["Landsat", "Sentinel-2", "Sentinel-1", "MODIS", "SRTM", "VIIRS", "PlanetScope", "ERA5"]
METHODS = {
    "ML": ["Random Forest", "Support Vector Machine", "CART", "Gradient Boosting", "k-Nearest Neighbors"],
    "DL": ["U-Net", "CNN", "LSTM", "ResNet", "DeepLab"],
    "CV": ["Object Detection", "Image Segmentation", "Change Detection"],
}
KEYWORDS = [
    "google earth engine", "machine learning", "deep learning", "random forest", "classification",
    "land use", "crop mapping", "time series", "cloud computing", "remote sensing", "sentinel-2",
    "landsat", "change detection", "segmentation", "big data", "mangrove", "flood mapping",
    "urbanization", "wetland mapping", "forest loss", "vegetation index", "soil moisture",
]
HARDWARE = ["GPU", "CPU", "RAM", "hard disk", "runtime", "TPU"]
CLOUD = ["Google Earth Engine", "Google Colab", "AWS", "Microsoft Azure", "none"]
TITLE_SUBJECTS = [
    "crop type", "land cover", "mangrove extent", "urban expansion", "surface water", "forest disturbance",
    "wetland", "burned area", "rice paddy", "soil salinity", "glacier", "impervious surface",
]
TITLE_TEMPLATES = [
    "Mapping {s} with {m} on Google Earth Engine",
    "A {m} approach for {s} monitoring using {d} time series",
    "Large-scale {s} classification from {d} imagery and {m}",
    "Assessing {s} dynamics with {d} and {m} in the cloud",
    "{m} for {s} detection: a cloud computing framework",
]


def write_csv(path, header, rows):
    with open(path, "w", newline="", encoding="utf-8") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)


def literature(out, rng):
    institutions = [(n, "United States", lat, lon) for n, _, _, lat, lon in US_INSTITUTIONS] + WORLD_INSTITUTIONS
    assert len(institutions) == 50
    header = [
        "id", "title", "journal", "year", "authors", "institution", "country", "lat", "lon",
        "application_focus", "rs_data", "method_macro", "method_detailed", "keywords", "hardware",
        "cloud", "cited_by", "url",
    ]
    rows = []
    for i in range(200):
        inst = institutions[i % 50] if i < 50 else rng.choice(institutions)
        macro = rng.choice(sorted(METHODS))
        detail = rng.choice(METHODS[macro])
        data = rng.sample(RS_DATA, rng.randint(1, 3))
        title = rng.choice(TITLE_TEMPLATES).format(s=rng.choice(TITLE_SUBJECTS), m=detail, d=data[0])
        hardware = ";".join(rng.sample(HARDWARE, rng.randint(1, 3))) if rng.random() < 0.4 else ""
        rows.append([
            f"P{i + 1:03d}",
            title,
            rng.choice(JOURNALS),
            rng.randint(2015, 2022),
            f"Author {i + 1} et al.",
            inst[0],
            inst[1],
            f"{inst[2]:.4f}",
            f"{inst[3]:.4f}",
            rng.choice(FOCUS),
            ";".join(data),
            macro,
            detail,
            ";".join(rng.sample(KEYWORDS, rng.randint(2, 5))),
            hardware,
            rng.choice(CLOUD),
            int(rng.expovariate(1 / 40)),
            f"https://example.org/papers/P{i + 1:03d}",
        ])
    write_csv(out / "literature.csv", header, rows)


FIRST_NAMES = [
    "Alice", "Beatriz", "Carmen", "Dana", "Elena", "Fatima", "Grace", "Hana", "Ines", "Julia", "Keiko",
    "Laura", "Maya", "Nadia", "Olivia", "Priya", "Quinn", "Rosa", "Sofia", "Tara", "Uma", "Vera",
    "Wen", "Ximena", "Yara", "Zoe",
]
LAST_NAMES = [
    "Abbott", "Bishop", "Castro", "Diaz", "Ellis", "Foster", "Garcia", "Hughes", "Ibrahim", "Jensen",
    "Kim", "Lopez", "Morgan", "Nguyen", "Ortiz", "Patel", "Reyes", "Singh", "Turner", "Vasquez",
    "Walsh", "Young", "Zhang",
]
WORKSHOPS = {
    2018: "Madison, Wisconsin",
    2019: "Boulder, Colorado",
    2020: "Virtual",
    2021: "Virtual",
    2022: "Blue Mountain Lake, New York",
}
INTERESTS = [
    "GIScience", "remote sensing", "spatial analysis", "cartography", "urban geography",
    "health geography", "geospatial AI", "hydrology", "environmental justice", "spatial statistics",
    "GIS education", "land change science", "political ecology", "physical geography",
]
DEGREE_FOCUS = ["Geography", "Environmental Science", "Computer Science", "Geology", "Urban Planning"]
ROLES = ["cohort"] * 8 + ["mentor", "speaker", "evaluator"]


def trelis(out, rng):
    header = [
        "name", "role", "cohort_number", "cohort_year", "workshop_location", "website", "email",
        "institution", "city", "state", "lat", "lon", "research_interests", "degree_focus",
    ]
    names = [f"{f} {l}" for f in FIRST_NAMES for l in LAST_NAMES]
    rng.shuffle(names)
    names = sorted(names[:71])
    rows = []
    for name in names:
        inst = rng.choice(US_INSTITUTIONS)
        year = rng.choice(sorted(WORKSHOPS))
        slug = name.lower().replace(" ", ".")
        rows.append([
            name,
            rng.choice(ROLES),
            f"cohort {year - 2017}",
            year,
            WORKSHOPS[year],
            f"https://example.org/people/{slug.replace('.', '-')}",
            f"{slug}@example.edu",
            inst[0],
            inst[1],
            inst[2],
            f"{inst[3]:.4f}",
            f"{inst[4]:.4f}",
            ";".join(rng.sample(INTERESTS, rng.randint(1, 4))),
            rng.choice(DEGREE_FOCUS),
        ])
    write_csv(out / "trelis.csv", header, rows)


FIG11_ROWS = [
    ("Aalborg University", "Europe", "Denmark", "Aalborg", "Public", "Very High", "L", "FC", 57.0157, 9.9768),
    ("Aalto University", "Europe", "Finland", "Espoo", "Public", "Very High", "L", "FO", 60.1867, 24.8277),
    ("Aarhus University", "Europe", "Denmark", "Aarhus", "Public", "Very High", "L", "FC", 56.1681, 10.2030),
    ("Abai Kazakh National Pedagogical University", "Asia", "Kazakhstan", "Almaty", "Public", "Medium", "L", "CO",
     43.2381, 76.9453),
    ("Aberystwyth University", "Europe", "United Kingdom", "Aberystwyth", "Public", "Very High", "M", "CO",
     52.4153, -4.0659),
    ("Abo Akademi University", "Europe", "Finland", "Turku", "Public", "Very High", "M", "CO", 60.4518, 22.2781),
    ("Abu Dhabi University", "Asia", "United Arab Emirates", "Abu Dhabi", "Private", "Very High", "S", "SP",
     24.4011, 54.4966),
    ("Adam Mickiewicz University, Poznań", "Europe", "Poland", "Poznań", "Public", "Very High", "XL", "CO",
     52.4064, 16.9252),
    ("Addis Ababa University", "Africa", "Ethiopia", "Addis Ababa", "", "High", "XL", "CO", 9.0348, 38.7636),
    ("AGH University of Science and Technology", "Europe", "Poland", "Krakow", "Public", "Very High", "L", "CO",
     50.0647, 19.9231),
]

WORLD_CITIES = {
    "Europe": {
        "United Kingdom": [("London", 51.507, -0.128), ("Manchester", 53.480, -2.243), ("Edinburgh", 55.953, -3.188)],
        "Germany": [("Berlin", 52.520, 13.405), ("Munich", 48.137, 11.575), ("Hamburg", 53.551, 9.993)],
        "France": [("Paris", 48.857, 2.352), ("Lyon", 45.764, 4.836), ("Toulouse", 43.605, 1.444)],
        "Italy": [("Rome", 41.903, 12.496), ("Milan", 45.464, 9.190), ("Bologna", 44.495, 11.343)],
        "Spain": [("Madrid", 40.417, -3.704), ("Barcelona", 41.385, 2.173)],
        "Netherlands": [("Amsterdam", 52.370, 4.895), ("Utrecht", 52.091, 5.122)],
        "Sweden": [("Stockholm", 59.329, 18.069), ("Lund", 55.705, 13.191)],
        "Poland": [("Warsaw", 52.230, 21.012), ("Wroclaw", 51.108, 17.039)],
        "Russia": [("Moscow", 55.756, 37.617), ("Saint Petersburg", 59.934, 30.335)],
    },
    "Asia": {
        "China": [("Beijing", 39.904, 116.407), ("Shanghai", 31.230, 121.474), ("Wuhan", 30.593, 114.305)],
        "Japan": [("Tokyo", 35.676, 139.650), ("Kyoto", 35.012, 135.768), ("Osaka", 34.694, 135.502)],
        "South Korea": [("Seoul", 37.567, 126.978), ("Daejeon", 36.351, 127.385)],
        "India": [("Delhi", 28.704, 77.102), ("Mumbai", 19.076, 72.878), ("Bangalore", 12.972, 77.595)],
        "Malaysia": [("Kuala Lumpur", 3.139, 101.687)],
        "Turkey": [("Istanbul", 41.008, 28.978), ("Ankara", 39.934, 32.860)],
    },
    "North America": {
        "United States": [("Boston", 42.360, -71.059), ("Chicago", 41.878, -87.630), ("Los Angeles", 34.052, -118.244),
                          ("Houston", 29.760, -95.370), ("Albuquerque", 35.084, -106.650)],
        "Canada": [("Toronto", 43.653, -79.383), ("Vancouver", 49.283, -123.121), ("Montreal", 45.502, -73.567)],
        "Mexico": [("Mexico City", 19.433, -99.133), ("Guadalajara", 20.660, -103.350)],
    },
    "South America": {
        "Brazil": [("Sao Paulo", -23.551, -46.633), ("Rio de Janeiro", -22.907, -43.173)],
        "Argentina": [("Buenos Aires", -34.604, -58.382)],
        "Chile": [("Santiago", -33.449, -70.669)],
    },
    "Oceania": {
        "Australia": [("Sydney", -33.869, 151.209), ("Melbourne", -37.814, 144.963), ("Brisbane", -27.470, 153.026)],
        "New Zealand": [("Auckland", -36.849, 174.763)],
    },
    "Africa": {
        "South Africa": [("Cape Town", -33.925, 18.424), ("Johannesburg", -26.204, 28.047)],
        "Egypt": [("Cairo", 30.044, 31.236)],
        "Nigeria": [("Lagos", 6.524, 3.379)],
        "Kenya": [("Nairobi", -1.292, 36.822)],
    },
}
NAME_ROOTS = [
    "Northvale", "Eastmoor", "Westbridge", "Southfield", "Riverton", "Lakeside", "Hillcrest", "Stonegate",
    "Fairhaven", "Brookmere", "Ashford", "Redwood", "Silverdale", "Kingsport", "Maplewood", "Oakridge",
    "Pinecrest", "Clearwater", "Highland", "Meadowbrook", "Summit", "Harbor", "Granite", "Willow",
    "Cedar", "Elmstead", "Foxglove", "Goldcrest", "Ironbridge", "Juniper", "Kestrel", "Larkspur",
]
NAME_FORMS = [
    "{r} University", "University of {r}", "{r} Institute of Technology", "{r} State University",
    "{r} Technical University", "{r} University of Science", "{r} Polytechnic University",
]
PUBLIC_PRIVATE = ["Public"] * 4 + ["Private"]
RESEARCH_OUTPUT = ["Very High", "High", "Medium", "Low"]
SIZES = ["XL", "L", "M", "S"]
SUBJECT_RANGE = ["FC", "FO", "CO", "SP"]
INDICATORS = [
    "academic_reputation", "employer_reputation", "faculty_student", "citations_per_faculty",
    "international_faculty", "international_students",
]
YEARS = list(range(2019, 2025))


def university_scores(rng, quality):
    out = {}
    for ind in INDICATORS:
        out[ind] = min(100.0, max(1.0, rng.gauss(quality * 100, 18)))
    overall = {}
    for year in YEARS:
        if rng.random() < 0.15:
            overall[year] = None
        else:
            overall[year] = min(100.0, max(1.0, quality * 100 + rng.gauss(0, 6)))
    return out, overall


def university(out, rng):
    header = ["university", "continent", "country", "city", "public_private", "research_output", "size",
              "subject_range", "lat", "lon"] + INDICATORS + [f"overall_{y}" for y in YEARS]

    def fmt(v):
        return "" if v is None else f"{v:.1f}"

    def row(fixed, quality):
        scores, overall = university_scores(rng, quality)
        lat, lon = fixed[8], fixed[9]
        return list(fixed[:8]) + [f"{lat:.4f}", f"{lon:.4f}"] + [fmt(scores[i]) for i in INDICATORS] + \
            [fmt(overall[y]) for y in YEARS]

    rows = [row(r, rng.uniform(0.3, 0.8)) for r in FIG11_ROWS]
    write_csv(out.parent / "fig11" / "fig11.csv", header, rows)

    names = set()
    places = [(c, k, city) for c, countries in WORLD_CITIES.items() for k, cities in countries.items() for city in cities]
    while len(rows) < 1497:
        continent, country, (city, lat, lon) = rng.choice(places)
        name = rng.choice(NAME_FORMS).format(r=rng.choice(NAME_ROOTS))
        if name in names:
            name = f"{name} {city}"
        if name in names or "aalborg" in name.lower():
            continue
        names.add(name)
        fixed = (name, continent, country, city, rng.choice(PUBLIC_PRIVATE), rng.choice(RESEARCH_OUTPUT),
                 rng.choice(SIZES), rng.choice(SUBJECT_RANGE), lat + rng.uniform(-0.2, 0.2),
                 lon + rng.uniform(-0.2, 0.2))
        quality = rng.betavariate(2, 3)
        if len(rows) < 60:
            quality = rng.uniform(0.9, 0.97)
        rows.append(row(fixed, quality))
    write_csv(out / "university.csv", header, rows)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2024)
    parser.add_argument("--out", type=pathlib.Path, default=ROOT / "apps")
    args = parser.parse_args()
    literature(args.out / "literature", random.Random(args.seed))
    trelis(args.out / "trelis", random.Random(args.seed + 1))
    university(args.out / "university", random.Random(args.seed + 2))


if __name__ == "__main__":
    main()
