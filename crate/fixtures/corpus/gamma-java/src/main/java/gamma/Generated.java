// Code generated by protoc-gen-java. DO NOT EDIT.
package gamma;

public final class Generated {
    public static final String NAME = "gamma";
}
