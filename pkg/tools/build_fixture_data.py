#!/usr/bin/env python3
"""Regenerate the pipeline fixture data under fixtures/.

Produces a 200-profile resume file engineered to exercise every cleaning
criterion, classification resolution path, trajectory shape, and model
cell, plus matching wage/GDP tables, crowd ratings with worker accuracies,
and the pipeline config wired to the packaged reference data.

Deterministic: fixed seed, identical output on every run.
"""

from __future__ import annotations

import csv
import json
import random
from pathlib import Path

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"
SEED = 20231002

STATES = ["CA", "NY", "TX", "WA", "IL", "GA", "MA", "OH", "CO", "NC", "AZ"]
MOVE_TARGETS = ["OH", "GA", "AZ", "NC"]  # low wage multipliers: moves can be downward
STATE_MULT = {
    "CA": 1.28, "NY": 1.30, "MA": 1.22, "WA": 1.20, "IL": 1.05, "CO": 1.08,
    "NC": 0.98, "TX": 1.00, "GA": 0.96, "AZ": 0.94, "OH": 0.90, "ZZ": 1.00,
}
GDP_STATES = STATES + ["FL", "PA", "MI", "VA", "NJ", "MN", "TN", "MO", "WI"]

# title -> soc6 prefix the mock classifier lands on (post-resolution)
TITLE_SOC6 = {
    "Operations manager": "11-1021",
    "Marketing manager": "11-2021",
    "Sales manager": "11-2022",
    "Farm manager": "11-9013",
    "Software engineer": "15-1252",
    "Data scientist": "15-2051",
    "Systems analyst": "15-1211",      # via 2010 crosswalk
    "Web developer": "15-1254",        # via crosswalk + selection (or 15-1255)
    "Financial analyst": "13-2051",
    "Accountant": "13-2011",
    "Consultant": "13-1111",
    "Agronomist": "19-1013",
    "Sales associate": "41-2031",
    "Cashier": "41-2011",
    "Receptionist": "43-4171",
    "Administrative assistant": "43-6014",
    "Customer service representative": "43-4051",
    "Registered nurse": "29-1141",
    "Pharmacist": "29-1051",
    "Data entry clerk": "43-9021",     # invalid generated code -> title fallback
}

BASE_WAGE = {
    "11-1021": 95000, "11-2021": 118000, "11-2022": 105000, "11-9013": 70000,
    "15-1252": 98000, "15-2051": 110000, "15-1211": 88000,
    "13-2051": 82000, "13-2011": 62000, "13-1111": 85000,
    "19-1013": 64000, "41-2031": 28000, "41-2011": 25000,
    "43-4171": 31000, "43-6014": 38000, "43-4051": 35000,
    "29-1141": 75000, "29-1051": 122000, "43-9021": 33000,
    "25-2031": 58000, "27-1024": 52000, "21-6011": 42000,
}
# legacy 6-digit rows shipped instead of direct ones; standardization re-keys
LEGACY_WAGE_SOURCES = {"15-1134": 74000, "29-2071": 46000}

TRACKS = [
    (["Operations manager", "Marketing manager", "Sales manager"], "541511"),
    (["Software engineer", "Data scientist", "Systems analyst"], "541512"),
    (["Financial analyst", "Accountant", "Consultant"], "522110"),
    (["Farm manager", "Agronomist", "Farm manager"], "111100"),
    (["Sales associate", "Cashier", "Sales manager"], "445110"),
    (["Receptionist", "Administrative assistant", "Customer service representative"], "522120"),
    (["Farm manager", "Operations manager", "Agronomist"], "111200"),
    (["Registered nurse", "Pharmacist", "Registered nurse"], "622110"),
    (["Web developer", "Software engineer", "Data entry clerk"], "541513"),
]

COMPANIES = {
    "11": ["Green Valley Agriculture", "Prairie Harvest Group", "Bluestem Farms",
           "Heartland Growers", "Cedar Creek Ranching", "Sunrise Orchards", "Delta Agronomy"],
    "44": ["Northline Retail", "Maple Market", "CityMart Stores",
           "Harbor Goods", "Summit Outfitters", "Lakeside Emporium", "Pioneer Mercantile"],
    "52": ["Sterling Mutual", "Granite Trust", "Beacon Capital",
           "Meridian Savings", "Atlas Financial", "Crown Ledger Group", "Keystone Holdings"],
    "54": ["Initech", "Vandelay Systems", "Northbridge Consulting",
           "Redwood Analytics", "Quartz Software", "Juniper Labs", "Foxglove Technologies"],
    "62": ["Mercy General Hospital", "Lakeview Clinic", "Riverbend Medical Center",
           "Summit Health Partners", "Harbor Care Network", "Evergreen Hospital", "Unity Medical"],
}

SCRIPTS = [
    # (title_idx, company_idx, months, same_state) per job; overlap handled separately
    [(0, 0, 72, True)],                                              # S0 stayer
    [(0, 0, 30, True), (1, 1, 42, True)],                           # S1 type1
    [(0, 0, 30, True), (1, 0, 42, True)],                           # S2 type2
    [(0, 0, 30, True), (0, 1, 42, False)],                          # S3 type3 + move
    [(0, 0, 30, True), (0, 0, 42, True)],                           # S4 type4
    [(0, 0, 24, True), (1, 0, 24, True), (2, 1, 30, True)],         # S5 type2+type1
    [(0, 0, 24, True), (0, 1, 24, True), (1, 1, 30, True)],         # S6 type3+type2
    [(0, 0, 12, True), (0, 1, 10, True), (1, 2, 12, True),
     (1, 3, 10, True), (0, 4, 12, True), (0, 5, 10, True), (2, 6, 14, True)],  # S7 churner
    "OVERLAP",                                                       # S8 overlap pruning
]


def ym(year: int, month: int) -> str:
    return f"{year:04d}-{month:02d}"


def add_months(year: int, month: int, n: int) -> tuple[int, int]:
    t = year * 12 + (month - 1) + n
    return t // 12, t % 12 + 1


def job(title, company, city, state, start, end, current=False, soc=None, naics=None):
    return {
        "title": title,
        "company": company,
        "city": city,
        "state": state,
        "country": "US",
        "start_date": start,
        "end_date": end,
        "is_current": current,
        "soc": soc,
        "naics": naics,
    }


def education(level, name, start, end, school, state):
    return {
        "degree_level": level,
        "degree_name": name,
        "start_date": start,
        "end_date": end,
        "school": school,
        "city": "College Town",
        "state": state,
    }


def lc_code_for(title: str, discordant: bool) -> str | None:
    """The dataset-provided label: the mock's code or a deliberately different one."""
    soc6 = TITLE_SOC6[title]
    if not discordant:
        mapping = {  # codes the mock emits before resolution, where they differ
            "Systems analyst": "15-1211.00",
            "Web developer": "15-1254.00",
            "Data entry clerk": "43-9021.00",
        }
        return mapping.get(title, soc6 + ".00")
    # a plausible but different valid 2019 code
    return "11-9199.00" if not soc6.startswith("11") else "13-1111.00"


def build_regular(i: int, rng: random.Random) -> dict:
    pid = f"P{i + 1:04d}"
    gender = ("male", "female")[i % 2]
    race = ("white", "white", "black", "asian", "hispanic")[i % 5]
    edu_level = (["bachelor"] * 7 + ["master", "master", "doctorate"])[i % 10]
    ba_year = (1999, 2002, 2005, 2008, 2011, 2013, 2000)[i % 7]
    state = STATES[i % 11]
    titles, naics = TRACKS[i % 9]
    script = SCRIPTS[(i // 10) % 9]
    gap_months = (6, 18, 30, 0, 12, 24, 33)[(i // 7) % 7]
    if i % 37 == 5:
        gap_months = -1  # job starts just before graduation; clamps to 0
    companies = COMPANIES[naics[:2]]

    if script == "OVERLAP":
        plan = [(0, 0, 30, True), (1, 0, 12, True), (1, 0, 30, True),
                (2, 1, 10, True), (2, 1, 24, True)]
        offsets = [0, 12, 30, 40, 60]  # months after first start; B and D overlap
        total_span = 84
    else:
        plan = script
        offsets = []
        t = 0
        for idx, (_, _, months, _) in enumerate(plan):
            offsets.append(t)
            t += months + (0 if idx % 2 == 0 else 2)
        total_span = t

    # keep every record inside the study timeframe
    y, m = add_months(ba_year, 5, max(gap_months, -1))
    latest_start = 2022 * 12 + 5 - total_span  # end by 2022-06
    if y * 12 + (m - 1) > latest_start:
        y, m = latest_start // 12, latest_start % 12 + 1

    jobs = []
    for idx, ((title_idx, company_idx, months, same_state), offset) in enumerate(zip(plan, offsets)):
        sy, sm = add_months(y, m, offset)
        ey, em = add_months(sy, sm, months)
        title = titles[title_idx]
        job_state = state if same_state else MOVE_TARGETS[i % 4]
        current = idx == len(plan) - 1 and i % 6 == 0 and ey * 12 + em >= 2022 * 12 + 10
        jobs.append(
            job(
                title,
                companies[company_idx % len(companies)],
                f"{job_state} City",
                job_state,
                ym(sy, sm),
                None if current else ym(ey, em),
                current=current,
                soc=lc_code_for(title, discordant=(i % 5 in (1, 3))),
                naics=naics,
            )
        )

    edu_records = [
        education("bachelor", "Liberal Arts", ym(ba_year - 4, 9), ym(ba_year, 5),
                  f"{state} State University", state)
    ]
    if edu_level == "master":
        edu_records.append(
            education("master", "Business Administration", ym(ba_year, 9),
                      ym(ba_year + 2, 5), f"{state} State University", state)
        )
    elif edu_level == "doctorate":
        edu_records.append(
            education("doctorate", "Economics", ym(ba_year, 9), ym(ba_year + 5, 5),
                      f"{state} State University", state)
        )
    return {
        "id": pid,
        "gender": gender,
        "race": race,
        "jobs": jobs,
        "education": edu_records,
    }


def build_specials() -> list[dict]:
    """25 hand-built profiles covering rejection and edge paths (ids P0176+)."""

    def base(i, gender="male", race="white", ba="2004-05"):
        ba_year = int(ba[:4])
        return {
            "id": f"P{176 + i:04d}",
            "gender": gender,
            "race": race,
            "jobs": [],
            "education": [
                education("bachelor", "History", ym(ba_year - 4, 9), ba, "Special U", "CA")
            ],
        }

    out = []

    p = base(0)  # record fails criterion 1 (no company); profile survives on the other job
    p["jobs"] = [
        job("Operations manager", "", "CA City", "CA", "2006-01", "2007-01"),
        job("Operations manager", "Initech", "CA City", "CA", "2007-02", "2014-06",
            soc="11-1021.00", naics="541511"),
    ]
    out.append(p)

    p = base(1, "female")  # all records fail criterion 1 -> rejected
    p["jobs"] = [job("Accountant", "Granite Trust", "", "NY", "2006-01", "2012-01")]
    out.append(p)

    p = base(2, "female", "black")  # student record dropped, rest retained
    p["jobs"] = [
        job("Student intern", "State University", "CA City", "CA", "2004-06", "2005-06",
            naics="611110"),
        job("Software engineer", "Initech", "CA City", "CA", "2005-08", "2009-01",
            soc="15-1252.00", naics="541512"),
        job("Data scientist", "Redwood Analytics", "CA City", "CA", "2009-01", "2012-06",
            soc="15-2051.00", naics="541512"),
    ]
    out.append(p)

    p = base(3)  # only job is non-occupational -> rejected under criterion 2
    p["jobs"] = [job("Student", "State University", "CA City", "CA", "2004-06", "2010-06")]
    out.append(p)

    p = base(4, "female", "asian")  # over-long title dropped, rest retained
    p["jobs"] = [
        job("Senior lead principal global strategic operations and planning manager",
            "Vandelay Systems", "NY City", "NY", "2005-01", "2006-01", naics="541511"),
        job("Marketing manager", "Vandelay Systems", "NY City", "NY", "2006-01", "2012-03",
            soc="11-2021.00", naics="541511"),
    ]
    out.append(p)

    p = base(5, "male", "hispanic")  # no bachelor's record -> criterion 3
    p["education"] = [education("master", "Finance", "2002-09", "2004-05", "Special U", "TX")]
    p["jobs"] = [job("Financial analyst", "Atlas Financial", "TX City", "TX", "2005-01",
                     "2011-06", soc="13-2051.00", naics="522110")]
    out.append(p)

    p = base(6)  # bachelor's record lacks end date -> criterion 3
    p["education"] = [education("bachelor", "Biology", "2000-09", None, "Special U", "CA")]
    p["jobs"] = [job("Registered nurse", "Mercy General Hospital", "CA City", "CA",
                     "2005-01", "2011-06", soc="29-1141.00", naics="622110")]
    out.append(p)

    p = base(7, "female")  # only a non-degree credential -> criterion 3
    p["education"] = [education("other", "Certificate", "2003-01", "2003-06", "Special U", "CA")]
    p["jobs"] = [job("Receptionist", "Hilton Hotels", "CA City", "CA", "2004-01", "2010-06",
                     soc="43-4171.00", naics="721110")]
    out.append(p)

    p = base(8, "male", "black", ba="2005-05")  # bachelor gap 4.1y > 3.75 -> criterion 4
    p["jobs"] = [job("Accountant", "Granite Trust", "NY City", "NY", "2009-06", "2015-06",
                     soc="13-2011.00", naics="522110")]
    out.append(p)

    p = base(9, "female", "white", ba="2005-05")  # master's holder, gap 4.3y < 5.59 -> retained
    p["education"].append(education("master", "Accounting", "2005-09", "2007-05", "Special U", "NY"))
    p["jobs"] = [
        job("Accountant", "Granite Trust", "NY City", "NY", "2009-09", "2013-01",
            soc="13-2011.00", naics="522110"),
        job("Financial analyst", "Granite Trust", "NY City", "NY", "2013-01", "2016-06",
            soc="13-2051.00", naics="522110"),
    ]
    out.append(p)

    p = base(10, "male", "asian", ba="2005-05")  # doctorate holder, gap 7.1y < 8.25 -> retained
    p["education"].append(education("doctorate", "Chemistry", "2005-09", "2011-05", "Special U", "MA"))
    p["jobs"] = [
        job("Data scientist", "Redwood Analytics", "MA City", "MA", "2012-06", "2016-01",
            soc="15-2051.00", naics="541512"),
        job("Software engineer", "Quartz Software", "MA City", "MA", "2016-03", "2018-06",
            soc="15-1252.00", naics="541512"),
    ]
    out.append(p)

    p = base(11, "female", "hispanic")  # pre-1999 record dropped, later history retained
    p["jobs"] = [
        job("Cashier", "CityMart Stores", "TX City", "TX", "1995-01", "1997-01", naics="445110"),
        job("Sales associate", "CityMart Stores", "TX City", "TX", "2000-01", "2003-06",
            soc="41-2031.00", naics="445110"),
        job("Sales manager", "Northline Retail", "TX City", "TX", "2003-08", "2006-06",
            soc="11-2022.00", naics="445110"),
    ]
    out.append(p)

    p = base(12)  # entire history before 1999 -> rejected under criterion 5
    p["jobs"] = [job("Accountant", "Granite Trust", "NY City", "NY", "1995-01", "1998-06",
                     soc="13-2011.00", naics="522110")]
    out.append(p)

    p = base(13, "female")  # reversed dates on one record -> criterion 1 drop
    p["jobs"] = [
        job("Receptionist", "Sterling Mutual", "IL City", "IL", "2012-01", "2010-01",
            naics="522110"),
        job("Administrative assistant", "Sterling Mutual", "IL City", "IL", "2005-03",
            "2011-06", soc="43-6014.00", naics="522110"),
    ]
    out.append(p)

    p = base(14, "male", "black")  # 3-year span -> dropped at the trajectory window
    p["jobs"] = [
        job("Software engineer", "Juniper Labs", "WA City", "WA", "2016-01", "2018-01",
            soc="15-1252.00", naics="541512"),
        job("Data scientist", "Juniper Labs", "WA City", "WA", "2018-01", "2019-01",
            soc="15-2051.00", naics="541512"),
    ]
    out.append(p)

    p = base(15, "female", "asian")  # single 3-year job -> dropped at the window
    p["jobs"] = [job("Pharmacist", "Lakeview Clinic", "GA City", "GA", "2018-06", "2021-06",
                     soc="29-1051.00", naics="622110")]
    out.append(p)

    p = base(16, None, "white")  # missing gender -> excluded at modeling
    p["gender"] = None
    p["jobs"] = [
        job("Operations manager", "Heartland Growers", "OH City", "OH", "2005-01", "2008-01",
            soc="11-1021.00", naics="111100"),
        job("Marketing manager", "Prairie Harvest Group", "OH City", "OH", "2008-03", "2012-06",
            soc="11-2021.00", naics="111100"),
    ]
    out.append(p)

    p = base(17, "male", None)  # missing race -> excluded at modeling
    p["race"] = None
    p["jobs"] = [
        job("Consultant", "Northbridge Consulting", "CO City", "CO", "2006-01", "2009-06",
            soc="13-1111.00", naics="541511"),
        job("Financial analyst", "Beacon Capital", "CO City", "CO", "2009-08", "2013-01",
            soc="13-2051.00", naics="522110"),
    ]
    out.append(p)

    p = base(18, "female", "white", ba="2006-05")  # job predates graduation; gap clamps to 0
    p["jobs"] = [
        job("Sales associate", "Maple Market", "NC City", "NC", "2006-04", "2009-01",
            soc="41-2031.00", naics="445110"),
        job("Sales manager", "Maple Market", "NC City", "NC", "2009-01", "2012-06",
            soc="11-2022.00", naics="445110"),
    ]
    out.append(p)

    p = base(19, "male", "hispanic")  # dense overlaps; selection keeps a clean sequence
    p["jobs"] = [
        job("Operations manager", "Initech", "CA City", "CA", "2004-06", "2007-06",
            soc="11-1021.00", naics="541511"),
        job("Consultant", "Initech", "CA City", "CA", "2005-01", "2006-01",
            soc="13-1111.00", naics="541511"),
        job("Marketing manager", "Initech", "CA City", "CA", "2007-06", "2010-01",
            soc="11-2021.00", naics="541511"),
        job("Sales manager", "Vandelay Systems", "CA City", "CA", "2008-01", "2009-01",
            soc="11-2022.00", naics="541511"),
        job("Operations manager", "Foxglove Technologies", "CA City", "CA", "2010-03",
            "2012-01", soc="11-1021.00", naics="541511"),
    ]
    out.append(p)

    p = base(20, "female", "black")  # classifier multi-role flag drops the first record
    p["jobs"] = [
        job("Graphic designer and photographer", "Juniper Labs", "WA City", "WA",
            "2005-01", "2006-01", naics="541512"),
        job("Web developer", "Juniper Labs", "WA City", "WA", "2006-02", "2010-01",
            soc="15-1254.00", naics="541512"),
        job("Software engineer", "Quartz Software", "WA City", "WA", "2010-02", "2013-06",
            soc="15-1252.00", naics="541512"),
    ]
    out.append(p)

    p = base(21, "male", "asian")  # unknown state: enrichment skip (no wage or GDP data)
    p["jobs"] = [
        job("Accountant", "Offshore Ledger", "Freeport", "ZZ", "2005-01", "2008-01",
            soc="13-2011.00", naics="522110"),
        job("Financial analyst", "Offshore Ledger", "Freeport", "ZZ", "2008-01", "2011-06",
            soc="13-2051.00", naics="522110"),
    ]
    out.append(p)

    p = base(22, "female", "hispanic")  # one long still-held job
    p["jobs"] = [job("Registered nurse", "Unity Medical", "IL City", "IL", "2014-03", None,
                     current=True, soc="29-1141.00", naics="622110")]
    out.append(p)

    p = base(23)  # no dataset-provided codes: excluded from HIT files, classifies fine
    p["jobs"] = [
        job("Receptionist", "Harbor Care Network", "CA City", "CA", "2004-01", "2007-06",
            naics="622110"),
        job("Administrative assistant", "Harbor Care Network", "CA City", "CA", "2007-08",
            "2011-01", naics="622110"),
    ]
    out.append(p)

    p = base(24, "female", "white")  # resume-style reverse chronological listing
    p["jobs"] = [
        job("Marketing manager", "Crown Ledger Group", "NY City", "NY", "2009-01", "2013-06",
            soc="11-2021.00", naics="522110"),
        job("Financial analyst", "Crown Ledger Group", "NY City", "NY", "2005-06", "2009-01",
            soc="13-2051.00", naics="522110"),
    ]
    out.append(p)

    return out


def write_profiles(path: Path, rng: random.Random) -> None:
    profiles = [build_regular(i, rng) for i in range(175)]
    profiles.extend(build_specials())
    assert len(profiles) == 200
    with path.open("w", encoding="utf-8") as fh:
        for p in profiles:
            fh.write(json.dumps(p) + "\n")
    print(f"profiles: {len(profiles)}")


def write_wages(path: Path) -> None:
    years = list(range(1999, 2023, 3)) + [2022]  # gaps exercise interpolation
    rows = []
    for state in STATES + MOVE_TARGETS:
        mult = STATE_MULT[state]
        for soc6, base in sorted(BASE_WAGE.items()):
            for year in sorted(set(years)):
                wage = round(base * mult * 1.02 ** (year - 1999), 2)
                rows.append((year, state, soc6, wage))
        for soc6, base in sorted(LEGACY_WAGE_SOURCES.items()):
            for year in sorted(set(years)):
                wage = round(base * mult * 1.02 ** (year - 1999), 2)
                rows.append((year, state, soc6, wage))
    rows.append((2010, "CA", "99-0000", 50000.0))  # unmapped legacy code, dropped with a log
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "state", "soc6", "mean_annual_wage"])
        writer.writerows(sorted(set(rows)))
    print(f"wages: {len(rows)} rows")


def write_gdp(path: Path) -> None:
    rows = []
    for rank, state in enumerate(sorted(GDP_STATES), start=1):
        for year in range(1999, 2023):
            gdp = round(rank * 50000 * 1.03 ** (year - 1999), 1)
            rows.append((year, state, gdp))
    with path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["year", "state", "real_gdp"])
        writer.writerows(sorted(rows))
    print(f"gdp: {len(rows)} rows")


def write_ratings(ratings_path: Path, accuracy_path: Path, rng: random.Random) -> None:
    workers = [f"W{i:02d}" for i in range(1, 28)]
    accuracies = {w: round(0.55 + 0.4 * ((i * 7) % 27) / 26, 3) for i, w in enumerate(workers)}
    with accuracy_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["worker_id", "accuracy"])
        writer.writerows(sorted(accuracies.items()))

    # fewsoc-labeled items skew accurate, lc-labeled ones less so
    quality = {"concordant": (3, 4, 4, 3, 4, 3), "fewsoc": (3, 4, 3, 3, 2, 4), "lc_soc": (2, 3, 4, 2, 3, 2)}
    rows = []
    hit_no = 0
    for source, cycle in quality.items():
        n_hits = {"concordant": 160, "fewsoc": 120, "lc_soc": 120}[source]
        for k in range(n_hits):
            hit_no += 1
            hit_id = f"R{hit_no:05d}"
            base_value = cycle[k % len(cycle)]
            raters = rng.sample(workers, 3) if k % 12 else rng.sample(workers, 1)
            for w in raters:
                jitter = rng.choice((-1, 0, 0, 0, 1))
                value = min(4, max(1, base_value + jitter))
                rows.append((hit_id, w, value, source))
    with ratings_path.open("w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["hit_id", "worker_id", "value", "source"])
        writer.writerows(rows)
    print(f"ratings: {len(rows)} rows, workers: {len(workers)}")


def write_config(path: Path) -> None:
    config = {
        "paths": {
            "taxonomy": "../src/socmobility/data/onet_soc_2019.csv",
            "crosswalks": [
                "../src/socmobility/data/crosswalk_2000_to_2010.csv",
                "../src/socmobility/data/crosswalk_2010_to_2019.csv",
            ],
            "wage_table": "wages.csv",
            "gdp_table": "gdp.csv",
            "shot_set": "../src/socmobility/data/fewshot_examples.txt",
            "input_profiles": "profiles_200.jsonl",
            "output_dir": "out",
            "ratings": "ratings.csv",
            "worker_accuracy": "worker_accuracy.csv",
        },
        "backend": {"kind": "mock", "model_name": "mock-soc-coder"},
        "batch_size": 5,
        "n_partitions": 4,
        "window_years": 5.0,
        "mobility_cap": 4,
        "snapshot_date": "2022-10",
        "graduation_age": 23,
        "rare_level_threshold": 10,
        "models": ["M1_main", "M2_gender_x_type", "M3_race_x_type", "M4_stratified"],
        "seed": SEED,
    }
    path.write_text(json.dumps(config, indent=2) + "\n", encoding="utf-8")
    print("config written")


def main() -> None:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    rng = random.Random(SEED)
    write_profiles(FIXTURE_DIR / "profiles_200.jsonl", rng)
    write_wages(FIXTURE_DIR / "wages.csv")
    write_gdp(FIXTURE_DIR / "gdp.csv")
    write_ratings(FIXTURE_DIR / "ratings.csv", FIXTURE_DIR / "worker_accuracy.csv", rng)
    write_config(FIXTURE_DIR / "config.json")


if __name__ == "__main__":
    main()
