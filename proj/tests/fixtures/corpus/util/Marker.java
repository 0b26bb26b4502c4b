package util;

public @interface Marker {
}
