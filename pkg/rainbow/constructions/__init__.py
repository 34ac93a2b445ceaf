"""Extremal colored point sets and the bounds they certify."""
