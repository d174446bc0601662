import logging

from exceptions.geometryExceptions import InvalidDescription
from model.manifoldModel import OneSided, TwoSided
from schemas.manifoldSchemas import (
    CoverSchema,
    DescriptionSchema,
    ValidationSchema,
    classification_to_schema,
    description_to_domain,
    description_to_schema,
    slope_to_schema,
    violations_to_schema,
)
from services.assemblyServices import (
    HORIZONTAL,
    canonical_foliation,
    classify,
    double_cover,
    require_valid,
    validate,
)
from services.generatorServices import random_descriptions
from services.slopeServices import slope_class, slope_of

logger = logging.getLogger(__name__)


def handle_slope(description: DescriptionSchema) -> dict:
    """Slope data and relative slope class of a description"""
    g = description_to_domain(description)
    require_valid(g)
    if isinstance(g, TwoSided):
        data = slope_of(g.torus, g.f1, g.f2)
    else:
        data = slope_of(g.torus, HORIZONTAL, canonical_foliation(g))
    klass = slope_class(data)
    logger.info("Slope of %s description: %s, class %s", g.sided.value, data.slope, klass)
    return {
        "success": True,
        "message": "Slope computed successfully",
        "data": slope_to_schema(data, klass).model_dump(mode="json"),
    }


def handle_classify(description: DescriptionSchema) -> dict:
    g = description_to_domain(description)
    result = classify(g)
    logger.info("Classified %s description as %s", g.sided.value, result.spaceform)
    return {
        "success": True,
        "message": "Description classified successfully",
        "data": classification_to_schema(result).model_dump(mode="json", exclude_none=True),
    }


def handle_validate(description: DescriptionSchema) -> dict:
    g = description_to_domain(description)
    violations = validate(g)
    logger.info("Validated %s description: %d violation(s)", g.sided.value, len(violations))
    return {
        "success": True,
        "message": "Description validated",
        "data": ValidationSchema(
            valid=not violations, violations=violations_to_schema(violations)
        ).model_dump(mode="json"),
    }


def handle_cover(description: DescriptionSchema) -> dict:
    """Orientation double cover of a one-sided description, classified"""
    g = description_to_domain(description)
    if not isinstance(g, OneSided):
        raise InvalidDescription("Only one-sided descriptions have an orientation double cover")
    cover = double_cover(g)
    result = classify(cover)
    logger.info("Double cover of P(%d,%d) is %s", abs(g.f.x), abs(g.f.y), result.spaceform)
    return {
        "success": True,
        "message": "Double cover computed successfully",
        "data": CoverSchema(
            cover=description_to_schema(cover),
            classification=classification_to_schema(result),
        ).model_dump(mode="json", exclude_none=True),
    }


def handle_gen(seed: int, count: int) -> dict:
    """Reproducible random valid descriptions"""
    descriptions = random_descriptions(seed, count)
    logger.info("Generated %d description(s) from seed %d", count, seed)
    return {
        "success": True,
        "message": "Descriptions generated successfully",
        "data": {
            "seed": seed,
            "descriptions": [
                description_to_schema(g).model_dump(mode="json", exclude_none=True) for g in descriptions
            ],
        },
    }
