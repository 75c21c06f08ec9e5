"""
    Seeding and measurement sampling.

"""
