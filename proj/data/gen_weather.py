#!/usr/bin/env python3
"""Writes porto_synthetic.epw: a deterministic synthetic weather year for a
mild Atlantic coastal site (annual mean 14.8 C, warm late July, cloudy
winters). Rerunning reproduces the file byte for byte."""

import math
import os

LAT, LON, TZ, ALT = 41.23, -8.68, 0.0, 73.0
MONTH_LENGTHS = [31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31]


class Lcg:
    """64-bit linear congruential generator, fixed seed."""

    def __init__(self, seed):
        self.state = seed & 0xFFFFFFFFFFFFFFFF

    def uniform(self):
        self.state = (self.state * 6364136223846793005 + 1442695040888963407) & 0xFFFFFFFFFFFFFFFF
        return (self.state >> 11) / float(1 << 53)

    def centered(self):
        # Sum of 12 uniforms, roughly standard normal.
        return sum(self.uniform() for _ in range(12)) - 6.0


def daily_profiles(rng):
    """Per-day mean temperature anomaly and cloud fraction.

    The anomaly is AR(1) with enough persistence to stack into multi-day heat
    spells. Cloud comes from a latent AR(1) squashed through a logistic with a
    seasonal bias, which makes days bimodal (clear or overcast) instead of
    uniformly grey."""
    anomaly, cloud = [], []
    a, x = 0.0, 0.0
    for d in range(365):
        a = 0.88 * a + 0.95 * rng.centered()
        a = max(-4.5, min(4.5, a))
        x = 0.55 * x + 0.5 * (2.0 * rng.uniform() - 1.0)
        season = 0.42 * math.cos(2 * math.pi * (d + 1 - 203) / 365.0) - 0.06
        c = 1.0 / (1.0 + math.exp(3.2 * (x + season)))
        anomaly.append(a)
        cloud.append(c)
    return anomaly, cloud


def sun_altitude(day, hour):
    decl = math.radians(23.45) * math.sin(2 * math.pi * (284 + day) / 365.0)
    solar_hour = hour + LON / 15.0  # site west of the zone meridian
    h = math.radians(15.0 * (solar_hour - 12.0))
    lat = math.radians(LAT)
    return math.asin(math.sin(lat) * math.sin(decl) + math.cos(lat) * math.cos(decl) * math.cos(h))


def main():
    rng = Lcg(3)  # year picked for Porto-like month means and a July heat spell
    anomaly, cloud = daily_profiles(rng)

    rows = []
    day_of_year = 0
    for month in range(12):
        for day in range(MONTH_LENGTHS[month]):
            day_of_year += 1
            t_mean = 14.2 + 5.8 * math.cos(2 * math.pi * (day_of_year - 203) / 365.0)
            t_mean += anomaly[day_of_year - 1]
            cl = cloud[day_of_year - 1]
            amp = 3.0 + 1.6 * (1.0 - cl)
            for hour in range(24):
                t = t_mean + amp * math.cos(2 * math.pi * (hour + 0.5 - 15.0) / 24.0)
                t += 0.25 * rng.centered()

                alt = sun_altitude(day_of_year, hour + 0.5)
                if alt > 0.01:
                    dni_clear = 1050.0 * math.exp(-0.15 / math.sin(alt))
                    dni = dni_clear * (1.0 - 0.93 * cl) ** 1.15
                    ghi_clear = dni_clear * math.sin(alt)
                    dhi = ghi_clear * (0.09 + 0.52 * cl)
                else:
                    dni = dhi = 0.0
                ghi = max(0.0, dni * max(0.0, math.sin(alt))) + dhi

                wind = max(0.2, 2.0 + 3.0 * rng.uniform() + 1.5 * cl)
                dew = t - (2.0 + 6.0 * (1.0 - cl))
                rh = min(98, int(round(68 + 25 * cl)))

                fields = [
                    "2013", str(month + 1), str(day + 1), str(hour + 1), "0", "SYN",
                    "%.1f" % t,            # 6 dry bulb
                    "%.1f" % dew,          # 7 dew point
                    str(rh),               # 8 relative humidity
                    "100800",              # 9 station pressure
                    "9999", "9999", "9999",  # 10-12 extraterrestrial, horizontal IR
                    "%.0f" % ghi,          # 13 global horizontal
                    "%.0f" % dni,          # 14 direct normal
                    "%.0f" % dhi,          # 15 diffuse horizontal
                    "999999", "999999", "999999", "9999",  # 16-19 illuminance, zenith lum
                    "270",                 # 20 wind direction
                    "%.1f" % wind,         # 21 wind speed
                    str(int(round(cl * 10))),  # 22 total sky cover
                    str(int(round(cl * 10))),  # 23 opaque sky cover
                    "20.0", "77777", "9", "999999999", "60",  # 24-28
                    "0.100", "0", "88", "0.2", "999", "99",   # 29-34
                ]
                rows.append(",".join(fields))

    header = [
        "LOCATION,Porto Synthetic,-,PRT,SYN,085450,%.2f,%.2f,%.1f,%.1f" % (LAT, LON, TZ, ALT),
        "DESIGN CONDITIONS,0",
        "TYPICAL/EXTREME PERIODS,0",
        "GROUND TEMPERATURES,0",
        "HOLIDAYS/DAYLIGHT SAVINGS,No,0,0,0",
        "COMMENTS 1,deterministic synthetic year, see gen_weather.py",
        "COMMENTS 2,dry bulb field 7, DNI 15, DHI 16, wind speed 22 (1-based)",
        "DATA PERIODS,1,1,Data,Sunday, 1/ 1,12/31",
    ]

    out = os.path.join(os.path.dirname(os.path.abspath(__file__)), "porto_synthetic.epw")
    with open(out, "w", newline="\n") as fh:
        fh.write("\n".join(header) + "\n")
        fh.write("\n".join(rows) + "\n")
    print("wrote %s (%d rows)" % (out, len(rows)))


if __name__ == "__main__":
    main()
